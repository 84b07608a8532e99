/**** decorated banner ****/
int deco = 1;
/* ** doubled gutter */
int dbl = 2;
