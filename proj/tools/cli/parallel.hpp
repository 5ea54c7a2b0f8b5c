#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rindler_ferm::cli {

/// Evaluates fn(i) for i in [0, count) on up to `workers` threads. Results are
/// stored by index, so their order never depends on scheduling. The first
/// exception thrown by any task is rethrown on the calling thread.
template <typename Fn>
auto parallel_map(std::size_t count, unsigned workers, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}));
  std::vector<Result> results(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(std::max(1U, workers), count));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < spawn; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace rindler_ferm::cli
