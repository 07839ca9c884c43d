// Internal helper: indexed parallel loop over independent tasks. Each index
// writes only its own outputs, so results are bit-identical for any thread
// count. PARAWAVE_THREADS overrides the worker count (0 or unset: all cores).
#ifndef PARAWAVE_SRC_PARALLEL_HPP
#define PARAWAVE_SRC_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace parawave::detail {

inline int thread_count() {
  const char *env = std::getenv("PARAWAVE_THREADS");
  int n = (env && *env) ? std::atoi(env) : 0;
  if (n <= 0)
    n = static_cast<int>(std::thread::hardware_concurrency());
  return n > 0 ? n : 1;
}

template <typename F> void parallel_for(int begin, int end, F &&fn) {
  const int span = end - begin;
  int workers = thread_count();
  if (workers > span)
    workers = span;
  if (workers <= 1) {
    for (int i = begin; i < end; ++i)
      fn(i);
    return;
  }
  std::atomic<int> next{begin};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < end; i = next.fetch_add(1))
        fn(i);
    });
  for (std::thread &th : pool)
    th.join();
}

} // namespace parawave::detail

#endif
