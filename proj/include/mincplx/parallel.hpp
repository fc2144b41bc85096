#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace mincplx {

/// Worker count: MINCPLX_THREADS if set and positive, capped by the hardware.
inline unsigned worker_count(unsigned requested = 0) {
  unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  unsigned cap = hw;
  if (const char* env = std::getenv("MINCPLX_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) cap = std::min(cap, static_cast<unsigned>(v));
  }
  return requested == 0 ? cap : std::min(requested, cap);
}

/// Runs fn(i) for i in [0, count) on up to `workers` threads. Callers write
/// results into per-index slots so the outcome does not depend on scheduling.
/// The first exception thrown by any task is rethrown.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace mincplx
