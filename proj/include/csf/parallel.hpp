#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace csf {

/// Runs f(i) for i in [0, count) on up to `threads` workers. Callers write
/// results into per-index slots, so the outcome is thread-count independent.
template <class F>
void parallel_for(std::size_t count, int threads, F&& f) {
  if (threads < 1) threads = 1;
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count ? count : 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) f(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace csf
