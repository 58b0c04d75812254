#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace interchange {

// Worker count from INTERCHANGE_THREADS, else the hardware concurrency.
std::size_t worker_count();

// Calls fn(i) for every i in [0, count) on a small pool of threads. Results
// must be written to per-index slots so the outcome does not depend on the
// schedule. The first exception thrown by any call is rethrown here.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t workers = std::min(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

// Seed of trajectory `index` under `master`: a SplitMix64 finalizer over
// both values, so any trajectory can be replayed on its own.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index);

}  // namespace interchange
