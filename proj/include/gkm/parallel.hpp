#ifndef GKM_PARALLEL_HPP
#define GKM_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace gkm {

// Worker cap: GKM_THREADS when set, hardware concurrency otherwise, never 0.
inline int worker_count() {
  if (const char* env = std::getenv("GKM_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs f(i) for i in [0, count) on up to worker_count() threads. Jobs are
// independent; callers write results into pre-sized slots so merged output
// stays deterministic.
template <class F>
void parallel_for(int count, F&& f) {
  const int workers = std::min(worker_count(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    threads.emplace_back([&, t] {
      for (int i = t; i < count; i += workers) f(i);
    });
  }
  for (auto& th : threads) th.join();
}

}  // namespace gkm

#endif
