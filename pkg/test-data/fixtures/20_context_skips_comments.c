// head note
int first = 1;
// interleaved note
int second = 2;
