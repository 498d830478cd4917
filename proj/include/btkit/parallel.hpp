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

namespace btkit {

// Worker count from BTKIT_JOBS, else the hardware concurrency.
inline unsigned default_jobs() {
  if (const char* env = std::getenv("BTKIT_JOBS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Calls fn(k) for k in [0, count) on up to `jobs` threads. Callers write
// results into slot k, so output order never depends on scheduling. The
// first exception thrown by any task is rethrown after all threads join.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        fn(k);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  unsigned t = std::min<std::size_t>(jobs, count);
  threads.reserve(t);
  for (unsigned k = 0; k < t; ++k) threads.emplace_back(worker);
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace btkit
