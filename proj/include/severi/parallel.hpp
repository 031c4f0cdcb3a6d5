#pragma once

#include <cstddef>
#include <functional>

namespace severi {

// 0 restores the default (hardware concurrency).
void set_thread_count(unsigned n);
unsigned thread_count();

// Runs body(i) for every i in [0, n). Work is handed out dynamically, so
// callers must write results into per-index slots to stay deterministic.
// The first exception thrown by any worker is rethrown here.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace severi
