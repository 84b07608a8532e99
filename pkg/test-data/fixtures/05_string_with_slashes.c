char* s = "// not a comment";
int after = 1;
