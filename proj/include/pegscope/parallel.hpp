#ifndef PEGSCOPE_PARALLEL_HPP
#define PEGSCOPE_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace pegscope {

// Thread cap: PEGSCOPE_THREADS env var, else hardware concurrency.
inline int default_thread_count() {
  if (const char* env = std::getenv("PEGSCOPE_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(i) for i in [0, n). Work is claimed in fixed-size blocks; each
// index is processed exactly once, so results indexed by i are independent
// of the schedule.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn, int threads = 0) {
  if (threads <= 0) threads = default_thread_count();
  if (threads == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t block = std::max<std::size_t>(1, n / (std::size_t)(threads * 8));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t begin = next.fetch_add(block);
      if (begin >= n) return;
      std::size_t end = std::min(n, begin + block);
      for (std::size_t i = begin; i < end; ++i) fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace pegscope

#endif
