#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace hecke2 {

/// Runs fn(i) for i in [0, n) on up to jobs threads, work-stealing over an
/// atomic counter. fn must be safe to call concurrently for distinct i.
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> threads;
  const unsigned count = jobs < n ? jobs : static_cast<unsigned>(n);
  threads.reserve(count);
  for (unsigned t = 0; t < count; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
}

}  // namespace hecke2
