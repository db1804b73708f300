#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace entrocon {

/// Effective worker count: explicit request > ENTROCON_THREADS > hardware.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ENTROCON_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

/// Runs fn(chunk_index, begin, end) over [0,n) split into fixed-size chunks.
/// The chunk boundaries depend only on (n, chunk_size), never on the thread
/// count, so per-chunk results can be reduced deterministically afterwards.
template <class Fn>
void parallel_chunks(std::int64_t n, std::int64_t chunk_size, int threads, Fn&& fn) {
  if (n <= 0) return;
  const std::int64_t n_chunks = (n + chunk_size - 1) / chunk_size;
  threads = resolve_threads(threads);
  if (threads <= 1 || n_chunks == 1) {
    for (std::int64_t c = 0; c < n_chunks; ++c)
      fn(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::atomic<std::int64_t> counter{0};
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::int64_t c = counter.fetch_add(1);
        if (c >= n_chunks) break;
        fn(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace entrocon
