#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace curvatura {

/// Data-parallel width. CURVATURA_THREADS caps it; defaults to the hardware
/// concurrency.
inline int thread_budget() {
  static const int budget = [] {
    unsigned hc = std::thread::hardware_concurrency();
    int def = hc == 0 ? 1 : static_cast<int>(std::min(hc, 16u));
    if (const char* env = std::getenv("CURVATURA_THREADS")) {
      int v = std::atoi(env);
      if (v >= 1) return std::min(v, 64);
    }
    return def;
  }();
  return budget;
}

/// Runs f(i) for i in [0, n). Results must be written to per-index disjoint
/// locations so the schedule cannot influence the output.
template <class F>
void parallel_for(long n, F&& f) {
  int workers = static_cast<int>(std::min<long>(thread_budget(), n));
  if (workers <= 1) {
    for (long i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<long> next{0};
  const long grain = std::max<long>(1, n / (8L * workers));
  auto work = [&] {
    for (;;) {
      long begin = next.fetch_add(grain);
      if (begin >= n) return;
      long end = std::min(n, begin + grain);
      for (long i = begin; i < end; ++i) f(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

}  // namespace curvatura
