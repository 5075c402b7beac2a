#pragma once
#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace formdiv {

// Run fn(i) for i in [0, count) on up to `jobs` threads. Results keep index
// order, so output is identical for every job count.
template <typename T>
std::vector<T> parallel_map(size_t count, int jobs, const std::function<T(size_t)>& fn) {
  std::vector<T> out(count);
  if (jobs < 2 || count < 2) {
    for (size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  size_t workers = std::min<size_t>(static_cast<size_t>(jobs), count);
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= count) return;
        out[i] = fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace formdiv
