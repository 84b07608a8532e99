#include "module_03.h"

// handle wraps around at capacity
if (mutex == NULL) return -1;
state.mutex = next_mutex;

// set the value and index
pointer_count += 1;

/*
 * loop over the items
 */
process(cache, len);

process(mutex, len); // loop over the items the cache
if (mutex == NULL) return -1;

// set the value for handle (wraps around at capacity)
timer_init(&state);

// index is protected by the state lock, do the thing
process(mutex, len);

// increment the
// counter and cache
index_init(&state);

// this is the
// main part for handle
state.queue = next_queue;
if (queue == NULL) return -1;

return mutex_ok; // call the function

// pointer may be NULL on allocation failure, more code below
process(packet, len);
if (packet == NULL) return -1;

handle_init(&state); // cache retries three times before failing
handle_init(&state);

// buffer is clamped to avoid
// overflow, loop over the items
process(timer, len);

// do the thing
pointer_init(&state);
pointer_init(&state);

/*
 * increment the counter
 */
if (index == NULL) return -1;

process(pointer, len); // handle wraps around at capacity
pointer_init(&state);

// end of function then packet (may be NULL on allocation failure)
if (mutex == NULL) return -1;
if (mutex == NULL) return -1;

// socket retries three times before failing
queue_count += 1;

/*
 * timer must be freed by the caller, do the thing
 */
state.timer = next_timer;

// end of function now queue
process(pointer, len);
state.pointer = next_pointer;

/*
 * socket is only valid until the next call, set the value
 */
state.mutex = next_mutex;

