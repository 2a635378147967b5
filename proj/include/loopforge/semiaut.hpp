#pragma once

#include <cstdint>
#include <vector>

#include "loopforge/loop_checks.hpp"
#include "loopforge/mapping.hpp"

namespace loopforge {

struct SemiAutOptions {
  // Search nodes (assignments, forced or branched) before giving up.
  std::uint64_t budget = 50'000'000;
  // Restrict to maps with f(identity) = identity. The unrestricted law
  // admits identity-moving maps (the swap on a 2-element loop is one), so
  // the default keeps them.
  bool identity_fixing_only = false;
};

// All bijections f with f((ab)a) = (f(a)f(b))f(a) and
// f(a(ba)) = f(a)(f(b)f(a)) for every a, b. Backtracking over images with
// propagation: once f(a) and f(b) are fixed, the images of (ab)a and a(ba)
// are forced. Output sorted by image array and verified closed under
// composition and inverse.
std::vector<Mapping> enumerate_semiautomorphisms(const CayleyTable& L,
                                                 SemiAutOptions opts = {});

// Same engine with the binary law f(ab) = f(a)f(b); used as the
// cross-check against the homomorphism subset of the list above.
std::vector<Mapping> enumerate_automorphisms(const CayleyTable& L,
                                             std::uint64_t budget = 50'000'000);

struct InnerGenerator {
  Mapping map;
  char kind;  // 'L', 'R' or 'T'
  int x;
  int y;  // -1 for T
};

// Standard inner mapping generators:
//   L(x,y): g -> (yx) \ (y(xg))
//   R(x,y): g -> ((gx)y) / (xy)
//   T(x):   g -> x \ (gx)
std::vector<InnerGenerator> inner_generators(const CayleyTable& L,
                                             ScanPolicy policy = {});

}  // namespace loopforge
