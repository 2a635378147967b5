#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loopforge/errors.hpp"
#include "loopforge/parallel.hpp"

namespace loopforge {

inline constexpr std::uint64_t kDefaultSeed = 0x1005EEDULL;

// Scan budget for triple checks. Domains above `cap` elements need
// samples > 0; the scan then draws that many seeded triples instead of all
// n^3.
struct ScanPolicy {
  int cap = 128;
  std::uint64_t samples = 0;
  std::uint64_t seed = kDefaultSeed;
};

struct ScanReport {
  bool holds = true;
  // Violating tuple, empty when holds. Full scans report the
  // lexicographically smallest violation; sampled scans the one with the
  // lowest sample counter. Both are worker-count independent.
  std::vector<int> witness;
  bool sampled = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  // Tuples evaluated along the canonical scan order; a determinism proxy
  // for runtime, identical across reruns.
  std::uint64_t checked = 0;
};

namespace detail {

// Shared triple-scan driver over a domain of n elements. `bad(x, y, z)`
// reports a violation; element values are 64-bit so lazily evaluated loops
// larger than any dense table fit.
template <class Bad>
ScanReport scan_triples(std::uint64_t n, const ScanPolicy& policy,
                        const char* what, Bad bad) {
  ScanReport rep;
  if (n <= static_cast<std::uint64_t>(policy.cap)) {
    const std::uint64_t total = n * n * n;
    const auto hit = find_first(total, [&](std::uint64_t i) {
      return bad(i / (n * n), (i / n) % n, i % n);
    });
    if (hit) {
      rep.holds = false;
      rep.witness = {static_cast<int>(*hit / (n * n)),
                     static_cast<int>((*hit / n) % n),
                     static_cast<int>(*hit % n)};
      rep.checked = *hit + 1;
    } else {
      rep.checked = total;
    }
    return rep;
  }
  if (policy.samples == 0)
    fail(errc::cap_exceeded,
         std::string(what) + ": order " + std::to_string(n) + " exceeds cap " +
             std::to_string(policy.cap) + " and no sampling budget was given");
  rep.sampled = true;
  rep.samples = policy.samples;
  rep.seed = policy.seed;
  const auto hit = find_first(policy.samples, [&](std::uint64_t s) {
    return bad(sample_draw(policy.seed, s, 0, n), sample_draw(policy.seed, s, 1, n),
               sample_draw(policy.seed, s, 2, n));
  });
  if (hit) {
    rep.holds = false;
    rep.witness = {static_cast<int>(sample_draw(policy.seed, *hit, 0, n)),
                   static_cast<int>(sample_draw(policy.seed, *hit, 1, n)),
                   static_cast<int>(sample_draw(policy.seed, *hit, 2, n))};
    rep.checked = *hit + 1;
  } else {
    rep.checked = policy.samples;
  }
  return rep;
}

}  // namespace detail

}  // namespace loopforge
