// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace chshkit {

/// Calls fn(i) for every i in [0, count) on up to hardware_concurrency
/// threads. Each index is visited exactly once; callers write results into
/// slots indexed by i, so the aggregate is independent of the thread count.
/// The first exception thrown by any call is rethrown after all workers join.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn, unsigned max_threads = 0) {
  unsigned threads = max_threads != 0 ? max_threads
                                      : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) {
        return;
      }
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) {
          error = std::current_exception();
        }
        next.store(count);
        return;
      }
    }
  };

  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

}  // namespace chshkit
