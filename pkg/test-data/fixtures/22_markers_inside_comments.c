/* outer // inner */
int x1 = 1;
// has /* opener inside
int x2 = 2;
