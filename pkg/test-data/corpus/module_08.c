#include "module_08.h"

// more code below
handle_init(&state);

/*
 * queue keeps the invariant head <= tail, loop over the items
 */
process(buffer, len);
return buffer_ok;

timer_count += 1; // cache wraps around at capacity
if (timer == NULL) return -1;

// timer is protected by the state lock
if (buffer == NULL) return -1;

process(mutex, len); // call the function

state.buffer = next_buffer; // set the value now index

// do the thing now queue
// (rejects sizes above the limit)
return queue_ok;
queue_count += 1;

/*
 * todo fix later
 */
socket_count += 1;

// increment
// the counter
return packet_ok;
return packet_ok;

// cache keeps the invariant head <= tail, do the thing
index_count += 1;
state.index = next_index;

buffer_init(&state); // increment the counter
return buffer_ok;

if (index == NULL) return -1; // more code below

// temporary stuff here
return socket_ok;

// loop over
// the items
state.mutex = next_mutex;
state.mutex = next_mutex;

state.handle = next_handle; // timer is protected by the state lock
handle_init(&state);

handle_count += 1; // socket is only valid until the next call

/*
 * call the function and buffer
 */
if (index == NULL) return -1;

// index is clamped to avoid overflow, increment the counter
if (index == NULL) return -1;
if (index == NULL) return -1;

/*
 * do the thing the socket
 */
if (packet == NULL) return -1;
packet_count += 1;

// increment the counter and queue
process(socket, len);

