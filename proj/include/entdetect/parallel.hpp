#pragma once

#include <functional>

namespace entdetect {

// Worker count: hardware concurrency, capped by the ED_THREADS environment
// variable when set to a positive integer.
int max_threads();

// Runs fn(0) .. fn(n-1) across max_threads() workers. Work items must be
// independent; callers keep determinism by writing results by index. The
// first exception thrown by a worker is rethrown after all workers join.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace entdetect
