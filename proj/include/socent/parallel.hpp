#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace socent {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [begin, end) across `threads` workers on contiguous
/// chunks. Callers are responsible for making writes disjoint; with
/// disjoint per-index writes the result is identical for any thread count.
template <typename F>
void parallel_for(std::uint64_t begin, std::uint64_t end, unsigned threads,
                  F&& fn) {
  threads = resolve_threads(threads);
  const std::uint64_t count = end > begin ? end - begin : 0;
  if (count == 0) return;
  if (threads <= 1 || count == 1) {
    for (std::uint64_t i = begin; i < end; ++i) fn(i);
    return;
  }
  if (threads > count) threads = static_cast<unsigned>(count);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::uint64_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = begin + t * chunk;
    const std::uint64_t hi = lo + chunk < end ? lo + chunk : end;
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::uint64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace socent
