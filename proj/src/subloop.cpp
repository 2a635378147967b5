#include "loopforge/subloop.hpp"

#include <algorithm>

namespace loopforge {

namespace {

// Characteristic vector of { s*x : s in S } or { x*s : s in S }.
void coset(const CayleyTable& L, const std::vector<int>& S, int x, bool left,
           std::vector<char>& out) {
  std::fill(out.begin(), out.end(), 0);
  for (int s : S) out[left ? L.mul(x, s) : L.mul(s, x)] = 1;
}

}  // namespace

SubsetHandle subloop_generated(const CayleyTable& L, const std::vector<int>& seed) {
  if (seed.empty()) fail(errc::malformed, "empty generating set");
  const int n = L.order();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  std::vector<int> members;
  const auto add = [&](int x) {
    if (x < 0 || x >= n) fail(errc::malformed, "generator out of range");
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(0);
  for (int s : seed) add(s);
  // Worklist closure: members[i] already multiplied against members[0..i-1].
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      add(L.mul(members[i], members[j]));
      add(L.mul(members[j], members[i]));
    }
  }
  return make_subset(L, std::move(members));
}

bool is_subloop(const CayleyTable& L, const SubsetHandle& S) {
  if (!S.contains(0)) return false;
  for (int a : S.members)
    for (int b : S.members)
      if (!S.contains(L.mul(a, b))) return false;
  return true;
}

bool is_normal(const CayleyTable& L, const SubsetHandle& S) {
  if (!is_subloop(L, S)) fail(errc::not_a_subloop, "normality needs a subloop");
  const int n = L.order();
  std::vector<char> lhs(static_cast<std::size_t>(n)), rhs(lhs.size());
  for (int x = 0; x < n; ++x) {
    coset(L, S.members, x, true, lhs);
    coset(L, S.members, x, false, rhs);
    if (lhs != rhs) return false;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      // (Sx)y vs S(xy)
      std::fill(lhs.begin(), lhs.end(), 0);
      for (int s : S.members) lhs[L.mul(L.mul(s, x), y)] = 1;
      coset(L, S.members, L.mul(x, y), false, rhs);
      if (lhs != rhs) return false;
      // y(xS) vs (yx)S
      std::fill(lhs.begin(), lhs.end(), 0);
      for (int s : S.members) lhs[L.mul(y, L.mul(x, s))] = 1;
      coset(L, S.members, L.mul(y, x), true, rhs);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

CayleyTable induced_table(const CayleyTable& L, const SubsetHandle& S) {
  if (!is_subloop(L, S)) fail(errc::not_a_subloop, "cannot induce a table");
  const int k = S.size();
  std::vector<int> flat(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int p = S.position(L.mul(S.members[i], S.members[j]));
      if (p < 0) fail(errc::internal_inconsistency, "closure violated");
      flat[static_cast<std::size_t>(i) * k + j] = p;
    }
  return CayleyTable(k, std::move(flat));
}

QuotientResult quotient(const CayleyTable& L, const SubsetHandle& N) {
  if (!is_normal(L, N)) fail(errc::not_normal, "quotient needs a normal subloop");
  const int n = L.order();
  std::vector<int> coset_of(static_cast<std::size_t>(n), -1);
  std::vector<char> mask(static_cast<std::size_t>(n));
  int classes = 0;
  // Left cosets; normality makes left and right agree. Scanning
  // representatives in ascending order puts the identity coset at 0.
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    coset(L, N.members, x, true, mask);
    if (!mask[x]) fail(errc::internal_inconsistency, "x not in xN");
    for (int g = 0; g < n; ++g)
      if (mask[g]) {
        if (coset_of[g] >= 0)
          fail(errc::internal_inconsistency, "cosets do not partition");
        coset_of[g] = classes;
      }
    ++classes;
  }
  const int q = classes;
  std::vector<int> flat(static_cast<std::size_t>(q) * q, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int lhs = coset_of[L.mul(a, b)];
      int& cell = flat[static_cast<std::size_t>(coset_of[a]) * q + coset_of[b]];
      if (cell < 0)
        cell = lhs;
      else if (cell != lhs)
        fail(errc::ill_defined, "coset product depends on representatives");
    }
  return QuotientResult{CayleyTable(q, std::move(flat)), std::move(coset_of)};
}

}  // namespace loopforge
