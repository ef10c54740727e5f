#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace dissoc {

/// Applies fn to 0..count-1 on up to `jobs` threads. Results come back in
/// index order, so the output never depends on the worker count. The first
/// exception thrown by any worker is rethrown after all workers join.
template <class Fn>
auto parallel_map(std::size_t count, int jobs, Fn fn) -> std::vector<std::invoke_result_t<Fn, std::size_t>> {
  using Result = std::invoke_result_t<Fn, std::size_t>;
  std::vector<Result> out(count);
  const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace dissoc
