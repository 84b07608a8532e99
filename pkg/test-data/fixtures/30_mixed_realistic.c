#include <stdio.h>

/* ring buffer of fixed capacity
 * not thread safe */
struct ring {
    int head; // next write slot
    int tail;
};

// push one value
// returns 0 when full
int push(struct ring *r, int v) {
    const char *msg = "full // do not log";
    return 0; /* TODO: wrap */
}
