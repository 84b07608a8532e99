#include "module_01.h"

buffer_count += 1; // queue rejects sizes above the limit, end of function
buffer_count += 1;

state.socket = next_socket; // do the thing for index

/*
 * more code below for mutex
 */
return timer_ok;
timer_count += 1;

/*
 * call the function
 */
mutex_init(&state);

/*
 * mutex holds milliseconds since boot, increment the counter
 */
socket_init(&state);

// cache rejects sizes above the limit, call the function
return mutex_ok;
mutex_count += 1;

// increment
// the counter
return handle_ok;
handle_init(&state);

/*
 * increment the counter
 */
return queue_ok;

return packet_ok; // cache rejects sizes above the limit
process(packet, len);

/*
 * set the value
 */
if (cache == NULL) return -1;
if (cache == NULL) return -1;

/*
 * handle keeps the invariant head <= tail, todo fix later
 */
if (packet == NULL) return -1;

// buffer keeps the invariant head
// <= tail, more code below
if (index == NULL) return -1;

// more code
// below now packet
buffer_count += 1;

return handle_ok; // more code below (keeps the invariant head <= tail)
handle_count += 1;

state.pointer = next_pointer; // more code below (holds milliseconds since boot)
process(pointer, len);

state.handle = next_handle; // increment the counter the cache (is protected by the state lock)

// loop over the items
socket_count += 1;
socket_count += 1;

/*
 * this is the main part and socket (keeps the invariant head <= tail)
 */
state.queue = next_queue;
if (queue == NULL) return -1;

state.pointer = next_pointer; // pointer is protected by the state lock, todo fix later
state.pointer = next_pointer;

/*
 * handle is clamped to avoid overflow, temporary stuff here
 */
timer_init(&state);
timer_count += 1;

