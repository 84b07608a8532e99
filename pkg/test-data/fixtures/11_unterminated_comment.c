int before = 1;
/* this never closes
 * still inside
