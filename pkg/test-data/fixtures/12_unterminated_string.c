char* s = "oops no close
int next = 3; // recovered line
g(next);
