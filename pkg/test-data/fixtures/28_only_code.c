int plain = 1;
int code = 2;
