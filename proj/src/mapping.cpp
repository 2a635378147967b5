#include "loopforge/mapping.hpp"

#include <numeric>

#include "loopforge/loop_checks.hpp"

namespace loopforge {

Mapping make_mapping(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : images) {
    if (v < 0 || v >= n) fail(errc::malformed, "image out of range");
    if (seen[v]) fail(errc::malformed, "images are not a permutation");
    seen[v] = 1;
  }
  return Mapping{std::move(images)};
}

Mapping identity_mapping(int n) {
  Mapping m;
  m.images.resize(static_cast<std::size_t>(n));
  std::iota(m.images.begin(), m.images.end(), 0);
  return m;
}

bool is_identity(const Mapping& m) {
  for (int x = 0; x < m.degree(); ++x)
    if (m.images[x] != x) return false;
  return true;
}

Mapping compose(const Mapping& m1, const Mapping& m2) {
  if (m1.degree() != m2.degree())
    fail(errc::parent_mismatch, "composing mappings of different degrees");
  Mapping out;
  out.images.resize(m1.images.size());
  for (int x = 0; x < m1.degree(); ++x) out.images[x] = m1.images[m2.images[x]];
  return out;
}

Mapping invert(const Mapping& m) {
  Mapping out;
  out.images.resize(m.images.size());
  for (int x = 0; x < m.degree(); ++x) out.images[m.images[x]] = x;
  return out;
}

int mapping_order(const Mapping& m) {
  const int n = m.degree();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int ord = 1;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    int len = 0, y = x;
    while (!seen[y]) {
      seen[y] = 1;
      y = m.images[y];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Mapping power(const Mapping& m, long long k) {
  const int ord = mapping_order(m);
  int e = static_cast<int>(((k % ord) + ord) % ord);
  Mapping acc = identity_mapping(m.degree());
  Mapping base = m;
  while (e > 0) {
    if (e & 1) acc = compose(base, acc);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

MapClass classify(const CayleyTable& L, const Mapping& m) {
  if (m.degree() != L.order())
    fail(errc::parent_mismatch, "mapping degree differs from loop order");
  const int n = L.order();
  MapClass c;
  c.order = mapping_order(m);
  c.is_automorphism = true;
  c.is_anti_automorphism = true;
  c.is_semi_automorphism = true;
  for (int a = 0; a < n; ++a) {
    const int fa = m(a);
    for (int b = 0; b < n; ++b) {
      const int fb = m(b);
      if (c.is_automorphism && m(L.mul(a, b)) != L.mul(fa, fb)) {
        c.is_automorphism = false;
        c.homo_witness = {a, b};
      }
      if (c.is_anti_automorphism && m(L.mul(a, b)) != L.mul(fb, fa)) {
        c.is_anti_automorphism = false;
        c.anti_witness = {a, b};
      }
      if (c.is_semi_automorphism) {
        const int rhs = L.mul(L.mul(fa, fb), fa);
        const int rhs2 = L.mul(fa, L.mul(fb, fa));
        if (m(L.mul(L.mul(a, b), a)) != rhs ||
            m(L.mul(a, L.mul(b, a))) != rhs2) {
          c.is_semi_automorphism = false;
          c.semi_witness = {a, b};
        }
      }
      if (!c.is_automorphism && !c.is_anti_automorphism &&
          !c.is_semi_automorphism)
        return c;
    }
  }
  return c;
}

Mapping conjugation_map(const CayleyTable& L, int u) {
  if (u < 0 || u >= L.order()) fail(errc::malformed, "u out of range");
  const int ui = L.inverse(u);
  if (L.mul(ui, u) != 0)
    fail(errc::ambiguous_conjugation,
         "element " + std::to_string(u) + " has no two-sided inverse");
  Mapping m;
  m.images.resize(static_cast<std::size_t>(L.order()));
  for (int g = 0; g < L.order(); ++g) {
    const int a = L.mul(L.mul(u, g), ui);
    const int b = L.mul(u, L.mul(g, ui));
    if (a != b)
      fail(errc::ambiguous_conjugation,
           "(ug)u^-1 != u(gu^-1) at g=" + std::to_string(g) +
               ", u=" + std::to_string(u));
    m.images[g] = a;
  }
  return make_mapping(std::move(m.images));
}

Mapping inversion_map(const CayleyTable& L) {
  Mapping m;
  m.images.resize(static_cast<std::size_t>(L.order()));
  for (int x = 0; x < L.order(); ++x) m.images[x] = L.inverse(x);
  return make_mapping(std::move(m.images));
}

Mapping power_map(const CayleyTable& L, int k) {
  const int n = L.order();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    const int ord = element_order(L, x);
    int e = ((k % ord) + ord) % ord;
    int acc = 0;
    for (int i = 0; i < e; ++i) acc = L.mul(acc, x);
    images[x] = acc;
  }
  return make_mapping(std::move(images));
}

}  // namespace loopforge
