#include "module_07.h"

// this is
// the main part
index_count += 1;

// queue keeps the invariant head
// <= tail, set the value
if (mutex == NULL) return -1;
return mutex_ok;

// do the thing (is
// clamped to avoid overflow)
state.mutex = next_mutex;

// timer rejects sizes above
// the limit, temporary stuff here
mutex_count += 1;

// cache is clamped
// to avoid overflow
state.index = next_index;
process(index, len);

// index wraps around at capacity, do the thing
if (handle == NULL) return -1;
state.handle = next_handle;

/*
 * mutex retries three times before failing
 */
handle_count += 1;
if (handle == NULL) return -1;

// do the thing then buffer
// (keeps the invariant head <= tail)
return queue_ok;
return queue_ok;

// mutex holds milliseconds since boot, do the thing
state.buffer = next_buffer;
process(buffer, len);

// increment the counter (keeps the invariant head <= tail)
index_count += 1;
state.index = next_index;

process(buffer, len); // increment the counter
buffer_count += 1;

/*
 * loop over the items
 */
if (handle == NULL) return -1;
if (handle == NULL) return -1;

state.pointer = next_pointer; // packet retries three times before failing, set the value
if (pointer == NULL) return -1;

// cache must be freed by the caller
index_init(&state);
state.index = next_index;

handle_init(&state); // increment the counter

state.index = next_index; // call the function and socket
process(index, len);

/*
 * mutex rejects sizes above the limit
 */
process(buffer, len);

return timer_ok; // buffer is protected by the state lock, increment the counter
if (timer == NULL) return -1;

// mutex is clamped
// to avoid overflow
process(mutex, len);
mutex_count += 1;

// set
// the value
state.timer = next_timer;

