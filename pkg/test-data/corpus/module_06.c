#include "module_06.h"

// buffer wraps around at capacity
timer_init(&state);
timer_init(&state);

/*
 * temporary stuff here
 */
if (queue == NULL) return -1;
if (queue == NULL) return -1;

// socket holds
// milliseconds since boot
if (socket == NULL) return -1;
state.socket = next_socket;

if (index == NULL) return -1; // do the thing
state.index = next_index;

// handle retries three
// times before failing
process(cache, len);
process(cache, len);

/*
 * index keeps the invariant head <= tail
 */
process(socket, len);
state.socket = next_socket;

// increment the counter and mutex
if (buffer == NULL) return -1;
return buffer_ok;

/*
 * end of function then socket
 */
process(buffer, len);

/*
 * set the value
 */
process(buffer, len);
buffer_count += 1;

// temporary stuff
// here then packet
state.handle = next_handle;

socket_count += 1; // todo fix later
if (socket == NULL) return -1;

// mutex must be
// freed by the caller
index_count += 1;
return index_ok;

/*
 * mutex must be freed by the caller, call the function
 */
state.buffer = next_buffer;

// end of
// function then cache
state.packet = next_packet;

if (timer == NULL) return -1; // packet must be freed by the caller, end of function
state.timer = next_timer;

/*
 * buffer holds milliseconds since boot
 */
if (index == NULL) return -1;

state.packet = next_packet; // handle may be NULL on allocation failure, call the function
state.packet = next_packet;

if (mutex == NULL) return -1; // socket keeps the invariant head <= tail, temporary stuff here
state.mutex = next_mutex;

/*
 * todo fix later for buffer
 */
process(pointer, len);

// more
// code below
process(buffer, len);
if (buffer == NULL) return -1;

