/* helper
 * module */
static int x;
