#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace superali {

/// Worker cap: SUPERALI_THREADS when set, hardware concurrency otherwise.
inline unsigned worker_cap() {
  if (const char* e = std::getenv("SUPERALI_THREADS")) {
    long v = std::strtol(e, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned h = std::thread::hardware_concurrency();
  return h ? h : 1;
}

/// Evaluates fn(0..n-1) across workers; results land in index order, so the
/// output is independent of scheduling.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t n, Fn fn) {
  std::vector<R> out(n);
  unsigned workers = std::min<std::size_t>(worker_cap(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        out[i] = fn(i);
      }
    });
  for (auto& t : pool) t.join();
  return out;
}

} // namespace superali
