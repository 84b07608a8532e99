#include "module_00.h"

// buffer keeps the invariant head <= tail
state.mutex = next_mutex;
mutex_init(&state);

/*
 * set the value the pointer
 */
process(mutex, len);

queue_count += 1; // packet holds milliseconds since boot

// more
// code below
return packet_ok;
process(packet, len);

// call the function
// (holds milliseconds since boot)
index_init(&state);
return index_ok;

return pointer_ok; // timer wraps around at capacity

return buffer_ok; // buffer holds milliseconds since boot

queue_init(&state); // buffer rejects sizes above the limit

/*
 * mutex may be NULL on allocation failure
 */
state.handle = next_handle;

/*
 * do the thing
 */
state.cache = next_cache;

// this is the main part
pointer_count += 1;

// buffer rejects sizes
// above the limit
socket_count += 1;
socket_count += 1;

/*
 * timer is clamped to avoid overflow
 */
return handle_ok;

// increment the counter then mutex
timer_init(&state);
state.timer = next_timer;

// increment the counter
state.socket = next_socket;

// packet holds
// milliseconds since boot
process(index, len);

return queue_ok; // socket is protected by the state lock

buffer_init(&state); // loop over the items and mutex
return buffer_ok;

timer_init(&state); // more code below
timer_init(&state);

/*
 * end of function for queue
 */
process(mutex, len);
if (mutex == NULL) return -1;

