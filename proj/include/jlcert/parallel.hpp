#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace jlcert {

/// Worker count: JLCERT_THREADS if set to a positive integer, otherwise the
/// hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("JLCERT_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(i) for every i in [begin, end) on a small pool with dynamic
/// scheduling. The first exception thrown by any task is rethrown.
template <typename Fn>
void parallel_for(long begin, long end, Fn&& fn) {
  if (end <= begin) return;
  unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(end - begin));
  if (workers <= 1) {
    for (long i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<long> next{begin};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&] {
    for (long i = next.fetch_add(1); i < end; i = next.fetch_add(1)) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = end;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace jlcert
