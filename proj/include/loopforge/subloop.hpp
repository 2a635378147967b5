#pragma once

#include <vector>

#include "loopforge/cayley_table.hpp"

namespace loopforge {

// Closure of seed plus the identity under the parent product. Multiplicative
// closure suffices for finiteness: translations restricted to a finite
// closed set are bijective, so divisions stay inside.
SubsetHandle subloop_generated(const CayleyTable& L, const std::vector<int>& seed);

// Contains 0 and is closed under mul.
bool is_subloop(const CayleyTable& L, const SubsetHandle& S);

// Normality via coset equations: for all x, y in L,
//   xS = Sx,  (Sx)y = S(xy),  y(xS) = (yx)S   (as sets).
bool is_normal(const CayleyTable& L, const SubsetHandle& S);

// Table of S in its own indices (position in the sorted member list);
// member 0 stays at index 0.
CayleyTable induced_table(const CayleyTable& L, const SubsetHandle& S);

struct QuotientResult {
  CayleyTable table;
  // coset_of[g] = index of g's coset; coset of the identity is 0, the rest
  // ordered by smallest member.
  std::vector<int> coset_of;
};

QuotientResult quotient(const CayleyTable& L, const SubsetHandle& N);

}  // namespace loopforge
