// first line of block
// second line of block
int merged = 1;
