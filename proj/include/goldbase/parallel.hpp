#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace goldbase {

/// Calls fn(begin, end) on `jobs` contiguous shards of [first, last).
/// The first exception thrown by any shard is rethrown after all shards join.
template <class Fn>
void parallel_for_ranges(std::int64_t first, std::int64_t last, unsigned jobs, Fn&& fn) {
  const std::int64_t count = last - first;
  if (count <= 0) return;
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2 * static_cast<std::int64_t>(jobs)) {
    fn(first, last);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> workers;
  const std::int64_t shard = (count + jobs - 1) / jobs;
  for (std::int64_t begin = first; begin < last; begin += shard) {
    const std::int64_t end = std::min(last, begin + shard);
    workers.emplace_back([&, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  workers.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace goldbase
