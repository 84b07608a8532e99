#include "module_02.h"

if (socket == NULL) return -1; // queue is clamped to avoid overflow, call the function
if (socket == NULL) return -1;

/*
 * set the value
 */
pointer_count += 1;
state.pointer = next_pointer;

// buffer may be NULL on allocation failure
state.cache = next_cache;

state.socket = next_socket; // do the thing
socket_count += 1;

// temporary stuff here
state.cache = next_cache;

state.timer = next_timer; // end of function

/*
 * set the value
 */
return packet_ok;
packet_count += 1;

/*
 * handle is clamped to avoid overflow
 */
mutex_init(&state);
if (mutex == NULL) return -1;

// set the value and mutex
buffer_init(&state);
buffer_init(&state);

/*
 * increment the counter (retries three times before failing)
 */
pointer_init(&state);
return pointer_ok;

cache_count += 1; // queue holds milliseconds since boot
cache_init(&state);

// set the value then
// packet (wraps around at capacity)
return mutex_ok;
mutex_init(&state);

// temporary stuff here then packet
handle_count += 1;
handle_init(&state);

// temporary stuff here the queue
return index_ok;

// queue is clamped to avoid overflow
process(packet, len);
return packet_ok;

/*
 * todo fix later now index
 */
return cache_ok;

process(cache, len); // increment the counter

// end of function
return queue_ok;
if (queue == NULL) return -1;

state.index = next_index; // cache keeps the invariant head <= tail
state.index = next_index;

// do the thing
process(index, len);
process(index, len);

