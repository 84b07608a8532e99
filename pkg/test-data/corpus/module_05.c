#include "module_05.h"

return cache_ok; // timer is only valid until the next call, set the value

index_count += 1; // loop over the items

// loop over the items and mutex
cache_count += 1;
return cache_ok;

// cache is clamped to
// avoid overflow, temporary stuff here
return queue_ok;

// call
// the function
if (mutex == NULL) return -1;

handle_init(&state); // cache must be freed by the caller, set the value

/*
 * end of function
 */
if (cache == NULL) return -1;

// buffer rejects sizes above
// the limit, temporary stuff here
cache_count += 1;
cache_count += 1;

// increment the
// counter now timer
state.timer = next_timer;
state.timer = next_timer;

// pointer holds milliseconds since
// boot, call the function
if (socket == NULL) return -1;

// end
// of function
return timer_ok;

/*
 * index holds milliseconds since boot, call the function
 */
if (mutex == NULL) return -1;
return mutex_ok;

// handle is clamped to
// avoid overflow, set the value
return index_ok;

// queue must be
// freed by the caller
queue_init(&state);
if (queue == NULL) return -1;

// index must be freed by the caller
return handle_ok;

// handle holds milliseconds since boot, temporary stuff here
state.queue = next_queue;

// timer is clamped to avoid overflow
process(packet, len);

/*
 * cache must be freed by the caller
 */
buffer_count += 1;

queue_init(&state); // call the function
return queue_ok;

/*
 * cache keeps the invariant head <= tail, do the thing
 */
return buffer_ok;

