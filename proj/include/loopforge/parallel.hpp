#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace loopforge {

// Number of scan workers. LOOPFORGE_THREADS bounds it (0 or unset = auto).
int worker_count();

// Test hook: force a worker count regardless of environment. Pass 0 to clear.
void override_worker_count(int workers);

// splitmix64, used as a counter-based generator so that sampled scans draw
// the same tuples no matter how the sample range is partitioned.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// slot-th component of the s-th sample drawn from [0, n).
inline std::uint64_t sample_draw(std::uint64_t seed, std::uint64_t s, int slot,
                                 std::uint64_t n) {
  return splitmix64(splitmix64(seed + 0x517cc1b727220a95ULL * slot) ^ s) % n;
}

namespace detail {

// Smallest index in [0, total) where `bad` returns true, or nullopt.
// Workers own contiguous ascending blocks; a worker stops once a strictly
// smaller index has been reported, so the reported minimum is exact and
// independent of the worker count.
template <class Pred>
std::optional<std::uint64_t> find_first_parallel(std::uint64_t total, Pred bad,
                                                 int workers) {
  std::atomic<std::uint64_t> best{total};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
    const std::uint64_t hi = std::min(total, lo + chunk);
    pool.emplace_back([lo, hi, &bad, &best]() {
      for (std::uint64_t i = lo; i < hi; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) return;
        if (bad(i)) {
          std::uint64_t cur = best.load(std::memory_order_relaxed);
          while (i < cur &&
                 !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
          }
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  const std::uint64_t found = best.load();
  if (found == total) return std::nullopt;
  return found;
}

}  // namespace detail

template <class Pred>
std::optional<std::uint64_t> find_first(std::uint64_t total, Pred bad) {
  const int workers = worker_count();
  if (workers <= 1 || total < 1u << 14) {
    for (std::uint64_t i = 0; i < total; ++i)
      if (bad(i)) return i;
    return std::nullopt;
  }
  return detail::find_first_parallel(total, bad, workers);
}

// Runs fn(i) for every i in [0, n). Work items must be independent; callers
// aggregate by index so results do not depend on scheduling. The first
// exception thrown by any item is rethrown after all workers finish.
template <class Fn>
void parallel_for(std::size_t n, Fn fn) {
  const int workers = worker_count();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([n, &next, &fn, &error, &error_mutex]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace loopforge
