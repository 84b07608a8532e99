#include "module_04.h"

state.queue = next_queue; // this is the main part

// timer must be
// freed by the caller
state.index = next_index;
index_count += 1;

timer_count += 1; // call the function

state.mutex = next_mutex; // set the value
return mutex_ok;

// socket rejects sizes above the limit
state.buffer = next_buffer;

// index retries three times before failing, loop over the items
index_count += 1;

/*
 * packet wraps around at capacity, more code below
 */
return handle_ok;

return handle_ok; // handle is protected by the state lock

/*
 * queue wraps around at capacity
 */
process(handle, len);
process(handle, len);

// pointer may be
// NULL on allocation failure
state.queue = next_queue;

timer_init(&state); // temporary stuff here
timer_count += 1;

// mutex is only valid until the next call, increment the counter
state.index = next_index;
index_count += 1;

/*
 * socket wraps around at capacity, more code below
 */
queue_count += 1;

// more code below
socket_count += 1;

// index retries three
// times before failing
state.buffer = next_buffer;

/*
 * handle is only valid until the next call, more code below
 */
return socket_ok;
process(socket, len);

// socket rejects sizes
// above the limit
buffer_init(&state);

// handle holds
// milliseconds since boot
queue_init(&state);
return queue_ok;

// socket holds
// milliseconds since boot
packet_init(&state);
if (packet == NULL) return -1;

/*
 * buffer wraps around at capacity, more code below
 */
process(pointer, len);

