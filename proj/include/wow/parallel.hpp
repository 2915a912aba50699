#ifndef WOW_PARALLEL_HPP
#define WOW_PARALLEL_HPP

#include <functional>
#include <thread>
#include <vector>

namespace wow {

// Static block partition; every index writes only its own slot, so results
// are identical for any thread count.
inline void parallel_for(int n, int threads,
                         const std::function<void(int)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  int workers = std::min(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (int i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace wow

#endif
