#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pivctr {

// Runs f(0..n-1) on up to `jobs` threads. Each index writes its own slot, so
// results do not depend on the schedule; the first exception is rethrown.
template <class F>
void parallel_for(int n, int jobs, F&& f) {
  if (jobs <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex mu;
  auto work = [&] {
    for (int i; (i = next++) < n;) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> ts;
  for (int t = 0; t < std::min(jobs, n); ++t) ts.emplace_back(work);
  for (auto& t : ts) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace pivctr
