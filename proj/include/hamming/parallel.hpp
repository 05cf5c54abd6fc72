#pragma once

#include <exception>
#include <mutex>

namespace hamming {

/// Runs body(k) for k in [0, count) across OpenMP threads with dynamic
/// scheduling. The first exception thrown by any iteration is rethrown on
/// the calling thread once the loop has drained.
template <class Body>
void parallel_for(long count, Body&& body) {
  std::exception_ptr failure;
  std::mutex guard;
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    try {
      body(k);
    } catch (...) {
      const std::lock_guard lock(guard);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace hamming
