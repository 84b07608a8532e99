char* s = "split \
// not a comment";
int after = 2;
