#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace abext {

  //! 0 means "use the available parallelism".
  inline unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0) {
      return jobs;
    }
    return std::max(1u, std::thread::hardware_concurrency());
  }

  //! Calls f(i) for every i in [0, n) on up to `jobs` threads. Indices are
  //! handed out dynamically; callers write results into slot i so the
  //! outcome does not depend on scheduling. The first exception thrown by
  //! any call is rethrown after all workers stop.
  template <typename Func>
  void parallel_for(std::size_t n, unsigned jobs, Func&& f) {
    jobs = std::min<unsigned>(resolve_jobs(jobs),
                              static_cast<unsigned>(std::max<std::size_t>(n, 1)));
    if (jobs <= 1) {
      for (std::size_t i = 0; i < n; ++i) {
        f(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool>        stop{false};
    std::exception_ptr       error;
    std::mutex               error_mutex;
    auto                     worker = [&] {
      while (!stop.load(std::memory_order_relaxed)) {
        auto i = next.fetch_add(1);
        if (i >= n) {
          return;
        }
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
          stop = true;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

}  // namespace abext
