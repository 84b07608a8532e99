/**/
//
/* */
int kept = 4; //
// survivor
tail();
