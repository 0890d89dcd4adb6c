#pragma once

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace leib {

/// Worker count: explicit request > LEIBNIZ_WORKERS env > hardware.
/// All parallel entry points merge per-worker results deterministically, so
/// the value never changes any verdict, only wall time.
inline unsigned resolve_workers(unsigned requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LEIBNIZ_WORKERS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

/// Split [0, total) into one contiguous slice per worker and run
/// fn(worker_id, begin, end) on its own thread.  fn must only write
/// worker-local state; callers combine the slices afterwards.
template <class F>
void parallel_slices(std::uint64_t total, unsigned workers, F&& fn) {
  if (workers <= 1 || total < 2) {
    fn(0u, std::uint64_t{0}, total);
    return;
  }
  if (workers > total) workers = static_cast<unsigned>(total);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::uint64_t chunk = total / workers, rem = total % workers, begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t len = chunk + (w < rem ? 1 : 0);
    threads.emplace_back([&fn, w, begin, end = begin + len] { fn(w, begin, end); });
    begin += len;
  }
  for (auto& t : threads) t.join();
}

} // namespace leib
