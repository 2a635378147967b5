#pragma once

#include <array>
#include <vector>

#include "loopforge/cayley_table.hpp"

namespace loopforge {

// A bijection of 0..n-1. Mappings carry no table reference; degree equality
// is what composition and classification check.
struct Mapping {
  std::vector<int> images;

  int degree() const noexcept { return static_cast<int>(images.size()); }
  int operator()(int x) const { return images[x]; }

  bool operator==(const Mapping& o) const { return images == o.images; }
  bool operator!=(const Mapping& o) const { return images != o.images; }
  // Lexicographic on image arrays; the canonical listing order.
  bool operator<(const Mapping& o) const { return images < o.images; }
};

// Checks the image array is a permutation.
Mapping make_mapping(std::vector<int> images);

Mapping identity_mapping(int n);

bool is_identity(const Mapping& m);

// (m1 o m2)(x) = m1(m2(x)).
Mapping compose(const Mapping& m1, const Mapping& m2);
Mapping invert(const Mapping& m);
// Negative k allowed.
Mapping power(const Mapping& m, long long k);

// lcm of cycle lengths.
int mapping_order(const Mapping& m);

struct MapClass {
  bool is_automorphism = false;
  bool is_anti_automorphism = false;
  bool is_semi_automorphism = false;
  int order = 1;
  // First violating pair per property, {-1,-1} when the property holds.
  std::array<int, 2> homo_witness{-1, -1};
  std::array<int, 2> anti_witness{-1, -1};
  std::array<int, 2> semi_witness{-1, -1};
};

// Full pair scans. The semi-automorphism law is checked in both bracketings,
// f((ab)a) = (f(a)f(b))f(a) and f(a(ba)) = f(a)(f(b)f(a)), since L need not
// be flexible.
MapClass classify(const CayleyTable& L, const Mapping& m);

// g -> (u g) u^-1. Requires u to have a two-sided inverse and the two
// bracketings (ug)u^-1 and u(gu^-1) to agree for every g.
Mapping conjugation_map(const CayleyTable& L, int u);

// x -> right inverse of x. Always a bijection on a loop.
Mapping inversion_map(const CayleyTable& L);

// x -> x^k via unambiguous powers; requires power associativity and k
// coprime to each element order (checked via bijectivity).
Mapping power_map(const CayleyTable& L, int k);

}  // namespace loopforge
