#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace flownet {

/// Worker count from the FLOWNET_THREADS environment variable (default 1).
inline int thread_count_from_env() {
  const char* env = std::getenv("FLOWNET_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n < 1 ? 1 : n;
}

/// Runs fn(i) for i in [0, count) across `threads` workers. Work is
/// striped by index, so any per-worker accumulation keyed by index order
/// stays deterministic regardless of scheduling.
inline void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w]() {
      for (int i = w; i < count; i += threads) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace flownet
