#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace mubeam {

// Index-sliced parallel map. Each index writes only its own outputs, so
// results are identical for any thread count.
template <typename Fn>
void parallel_for(int n, int threads, Fn&& fn) {
  threads = std::max(1, threads);
  if (threads == 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  threads = std::min(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([=, &fn]() {
      for (int i = t; i < n; i += threads) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace mubeam
