#pragma once

#include <cstddef>
#include <functional>

namespace smatrix {

// Worker cap: SMATRIX_THREADS when set (minimum 1), else hardware
// concurrency.
std::size_t thread_cap();

// Runs body(i) for i in [0, count), handing indices to workers from a shared
// counter. The first exception thrown by any worker is rethrown after all
// workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace smatrix
