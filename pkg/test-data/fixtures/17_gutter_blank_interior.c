/*
 * first paragraph
 *
 * second paragraph
 */
int doc = 5;
