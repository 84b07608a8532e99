// window holds three lines
int a1 = 1;
int a2 = 2;
int a3 = 3;
int a4 = 4;
