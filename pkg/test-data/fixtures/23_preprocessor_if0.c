#if 0
// disabled but extracted
int dead = 1;
#endif
int alive = 2;
