// only sees one line
int near = 1;

int far = 2;
