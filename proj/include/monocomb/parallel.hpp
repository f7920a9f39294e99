#pragma once

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace monocomb {

/// Run fn(row_begin, row_end) over disjoint row blocks on `jobs` threads.
/// Callers must only write rows inside their block; all blocks may read any
/// shared input. With jobs <= 1 the call degenerates to fn(0, height).
/// Because blocks are disjoint, results are bit-identical to sequential
/// execution for any jobs value.
inline void parallel_rows(int height, int jobs,
                          const std::function<void(int, int)>& fn) {
  if (jobs <= 1 || height <= 1) {
    fn(0, height);
    return;
  }
  const int workers = std::min(jobs, height);
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  threads.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    const int begin = static_cast<int>(static_cast<long long>(height) * t / workers);
    const int end = static_cast<int>(static_cast<long long>(height) * (t + 1) / workers);
    threads.emplace_back([&, t, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace monocomb
