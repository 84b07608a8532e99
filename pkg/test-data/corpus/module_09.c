#include "module_09.h"

// packet holds milliseconds since boot
pointer_count += 1;

// queue holds milliseconds since boot, do the thing
state.buffer = next_buffer;
process(buffer, len);

// queue is clamped to avoid overflow
state.socket = next_socket;

process(mutex, len); // socket rejects sizes above the limit, set the value
mutex_init(&state);

// index is only valid until the next call
if (queue == NULL) return -1;

/*
 * queue retries three times before failing
 */
process(timer, len);
state.timer = next_timer;

/*
 * index is only valid until the next call, temporary stuff here
 */
socket_count += 1;

// more
// code below
if (buffer == NULL) return -1;
buffer_init(&state);

queue_count += 1; // loop over the items for buffer
queue_init(&state);

// buffer is protected by the state lock
if (buffer == NULL) return -1;

mutex_init(&state); // handle retries three times before failing
mutex_count += 1;

// packet holds milliseconds since
// boot, do the thing
return mutex_ok;

// index may be NULL on allocation failure, temporary stuff here
state.pointer = next_pointer;

// packet holds
// milliseconds since boot
if (mutex == NULL) return -1;

// buffer must be
// freed by the caller
return cache_ok;
state.cache = next_cache;

index_init(&state); // timer is only valid until the next call, loop over the items
if (index == NULL) return -1;

// queue retries three times
// before failing, increment the counter
process(timer, len);
timer_init(&state);

// set
// the value
packet_count += 1;
if (packet == NULL) return -1;

index_init(&state); // timer is protected by the state lock

// loop over
// the items
if (queue == NULL) return -1;

