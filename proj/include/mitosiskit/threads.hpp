#pragma once

#include <cstddef>
#include <functional>

namespace mitosiskit {

// Worker count for data-parallel loops. Controlled by MITOSIS_KIT_THREADS;
// defaults to the hardware concurrency capped at 8, and never below 1.
int thread_count();

// Runs fn(0..n-1) across thread_count() workers. The first exception thrown
// by any worker is rethrown in the calling thread after the loop drains.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace mitosiskit
