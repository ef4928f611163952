#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mstsketch {

// Runs fn(0..count-1) across up to `workers` threads. Each index is handed
// to exactly one worker; callers make results order-independent by writing
// into preallocated slots. The first exception wins and is rethrown after
// all workers join.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  if (count == 0)
    return;
  if (workers <= 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  const unsigned thread_count =
      static_cast<unsigned>(std::min<std::size_t>(workers, count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(thread_count);
  for (unsigned t = 0; t < thread_count; ++t) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count)
          return;
        try {
          fn(i);
        } catch (...) {
          std::scoped_lock lock(error_mutex);
          if (!first_error)
            first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (std::thread& t : pool)
    t.join();
  if (first_error)
    std::rethrow_exception(first_error);
}

} // namespace mstsketch
