#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace periharm {

/// Thread cap: min(hardware_concurrency, PERIHARM_THREADS). At least 1.
inline unsigned max_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("PERIHARM_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
  }
  return hw;
}

/// Runs fn(i) for i in [0, count). Work items must be independent;
/// results keyed by index stay in declaration order.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  unsigned nthreads = std::min<std::size_t>(max_threads(), count);
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (unsigned t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += nthreads) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace periharm
