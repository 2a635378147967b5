#include "loopforge/loop_checks.hpp"

#include <numeric>
#include <string>

#include "loopforge/parallel.hpp"

namespace loopforge {

namespace {

template <class Violated>
ScanReport triple_scan(const CayleyTable& L, const ScanPolicy& policy,
                       const char* what, Violated bad) {
  return detail::scan_triples(
      static_cast<std::uint64_t>(L.order()), policy, what,
      [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
        return bad(static_cast<int>(x), static_cast<int>(y),
                   static_cast<int>(z));
      });
}

bool moufang_violated(const CayleyTable& L, int which, int x, int y, int z) {
  switch (which) {
    case 0:  // (xy)(zx) = x((yz)x)
      return L.mul(L.mul(x, y), L.mul(z, x)) !=
             L.mul(x, L.mul(L.mul(y, z), x));
    case 1:  // (xy)(zx) = (x(yz))x
      return L.mul(L.mul(x, y), L.mul(z, x)) !=
             L.mul(L.mul(x, L.mul(y, z)), x);
    case 2:  // ((xy)x)z = x(y(xz))
      return L.mul(L.mul(L.mul(x, y), x), z) !=
             L.mul(x, L.mul(y, L.mul(x, z)));
    default:  // ((zx)y)x = z(x(yx))
      return L.mul(L.mul(L.mul(z, x), y), x) !=
             L.mul(z, L.mul(x, L.mul(y, x)));
  }
}

// -1 when the left and right power chains diverge before reaching 0.
int element_order_or_minus1(const CayleyTable& L, int x) {
  int l = x, r = x;
  for (int k = 1; k <= L.order(); ++k) {
    if (l != r) return -1;
    if (l == 0) return k;
    l = L.mul(l, x);
    r = L.mul(x, r);
  }
  fail(errc::internal_inconsistency, "power chain failed to reach identity");
}

}  // namespace

ScanReport is_group(const CayleyTable& L, ScanPolicy policy) {
  return triple_scan(L, policy, "associativity scan", [&](int x, int y, int z) {
    return L.mul(L.mul(x, y), z) != L.mul(x, L.mul(y, z));
  });
}

ScanReport is_moufang(const CayleyTable& L, MoufangMode mode, ScanPolicy policy) {
  if (mode == MoufangMode::single) {
    return triple_scan(L, policy, "moufang scan", [&](int x, int y, int z) {
      return moufang_violated(L, 0, x, y, z);
    });
  }
  ScanReport reports[4];
  for (int which = 0; which < 4; ++which)
    reports[which] =
        triple_scan(L, policy, "moufang scan", [&, which](int x, int y, int z) {
          return moufang_violated(L, which, x, y, z);
        });
  int holding = 0;
  for (const auto& r : reports) holding += r.holds ? 1 : 0;
  if (holding != 0 && holding != 4)
    fail(errc::internal_inconsistency,
         "the four moufang identities disagree (" + std::to_string(holding) +
             " of 4 hold); checker bug");
  ScanReport rep = reports[0];
  for (int which = 1; which < 4; ++which) {
    rep.checked += reports[which].checked;
    if (!reports[which].holds &&
        (rep.holds || reports[which].witness < rep.witness)) {
      rep.holds = false;
      rep.witness = reports[which].witness;
    }
  }
  return rep;
}

ScanReport is_commutative(const CayleyTable& L) {
  const int n = L.order();
  const std::uint64_t nn = static_cast<std::uint64_t>(n);
  ScanReport rep;
  const auto hit = find_first(nn * nn, [&](std::uint64_t i) {
    const int x = static_cast<int>(i / nn);
    const int y = static_cast<int>(i % nn);
    return L.mul(x, y) != L.mul(y, x);
  });
  if (hit) {
    rep.holds = false;
    rep.witness = {static_cast<int>(*hit / nn), static_cast<int>(*hit % nn)};
    rep.checked = *hit + 1;
  } else {
    rep.checked = nn * nn;
  }
  return rep;
}

int element_order(const CayleyTable& L, int x) {
  const int k = element_order_or_minus1(L, x);
  if (k < 0)
    fail(errc::not_power_associative,
         "left and right powers of " + std::to_string(x) + " diverge");
  return k;
}

int exponent(const CayleyTable& L) {
  int e = 1;
  for (int x = 0; x < L.order(); ++x) e = std::lcm(e, element_order(L, x));
  return e;
}

bool is_power_associative(const CayleyTable& L) {
  for (int x = 0; x < L.order(); ++x)
    if (element_order_or_minus1(L, x) < 0) return false;
  return true;
}

std::vector<int> order_profile(const CayleyTable& L) {
  std::vector<int> orders(L.order());
  for (int x = 0; x < L.order(); ++x) orders[x] = element_order(L, x);
  std::sort(orders.begin(), orders.end());
  return orders;
}

SubsetHandle nucleus(const CayleyTable& L, ScanPolicy policy) {
  const int n = L.order();
  if (n > policy.cap)
    fail(errc::cap_exceeded, "nucleus scan: order " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(policy.cap));
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t a_) {
    const int a = static_cast<int>(a_);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (L.mul(L.mul(a, x), y) != L.mul(a, L.mul(x, y))) return;
        if (L.mul(L.mul(x, a), y) != L.mul(x, L.mul(a, y))) return;
        if (L.mul(L.mul(x, y), a) != L.mul(x, L.mul(y, a))) return;
      }
    in[a_] = 1;
  });
  std::vector<int> members;
  for (int a = 0; a < n; ++a)
    if (in[a]) members.push_back(a);
  return make_subset(L, std::move(members));
}

SubsetHandle center(const CayleyTable& L, ScanPolicy policy) {
  SubsetHandle nuc = nucleus(L, policy);
  std::vector<int> members;
  for (int a : nuc.members) {
    bool central = true;
    for (int x = 0; x < L.order() && central; ++x)
      central = L.mul(a, x) == L.mul(x, a);
    if (central) members.push_back(a);
  }
  return make_subset(L, std::move(members));
}

}  // namespace loopforge
