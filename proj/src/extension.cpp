#include "loopforge/extension.hpp"

#include <numeric>

#include "loopforge/subloop.hpp"

namespace loopforge {

int cube_root_exponent(int h) {
  if (h < 1) fail(errc::malformed, "h must be positive");
  if (h % 3 == 0)
    fail(errc::coprimality_violation,
         "no cube roots: 3 divides h = " + std::to_string(h));
  for (int t = 0; t < h; ++t)
    if (3 * t % h == 1 % h) return t;
  fail(errc::internal_inconsistency, "cube root exponent not found");
}

ExtensionSpec::ExtensionSpec(CayleyTable base, int h, Mapping action,
                             std::string name)
    : base_(std::move(base)), h_(h), name_(std::move(name)) {
  if (h_ < 1) fail(errc::malformed, "h must be positive");
  if (h_ % 3 == 0)
    fail(errc::coprimality_violation,
         "h = " + std::to_string(h_) + " is divisible by 3");
  if (action.degree() != base_.order())
    fail(errc::parent_mismatch, "action degree " +
                                    std::to_string(action.degree()) +
                                    " differs from base order " +
                                    std::to_string(base_.order()));
  if (action(0) != 0)
    fail(errc::moves_identity,
         "action sends the identity to " + std::to_string(action(0)) +
             "; the product law would lose its identity element");
  const MapClass cls = classify(base_, action);
  if (!cls.is_semi_automorphism)
    fail(errc::not_semi_automorphism,
         "action violates the semi-automorphism law at pair (" +
             std::to_string(cls.semi_witness[0]) + ", " +
             std::to_string(cls.semi_witness[1]) + ")");
  if (h_ % cls.order != 0)
    fail(errc::bad_order, "action order " + std::to_string(cls.order) +
                              " does not divide h = " + std::to_string(h_));
  t_ = cube_root_exponent(h_);
  pow_.reserve(static_cast<std::size_t>(h_));
  pow_.push_back(identity_mapping(base_.order()));
  for (int k = 1; k < h_; ++k) pow_.push_back(compose(action, pow_.back()));
  if (name_.empty()) {
    name_ = (base_.name().empty() ? std::string("base") : base_.name()) +
            ":h" + std::to_string(h_);
  }
}

const Mapping& ExtensionSpec::action_power(long long k) const {
  return pow_[static_cast<std::size_t>(((k % h_) + h_) % h_)];
}

const Mapping& ExtensionSpec::third_power(long long k) const {
  return action_power(static_cast<long long>(t_) * k);
}

ExtElement ExtensionSpec::product(const ExtElement& a, const ExtElement& b) const {
  const long long k = 2LL * a.m + b.m;
  const Mapping& outer = third_power(k);
  const Mapping& left = third_power(-k);
  const Mapping& right = third_power(a.m - b.m);
  return ExtElement{outer(base_.mul(left(a.x), right(b.x))),
                    static_cast<int>((a.m + b.m) % h_)};
}

CayleyTable materialize(const ExtensionSpec& spec, int cap) {
  const long long n = spec.order();
  if (n > cap)
    fail(errc::cap_exceeded, "extension of order " + std::to_string(n) +
                                 " exceeds materialization cap " +
                                 std::to_string(cap));
  const int N = static_cast<int>(n);
  std::vector<int> flat(static_cast<std::size_t>(N) * N);
  parallel_for(static_cast<std::size_t>(N), [&](std::size_t i) {
    for (int j = 0; j < N; ++j)
      flat[i * N + j] = static_cast<int>(
          spec.product_index(static_cast<long long>(i), j));
  });
  try {
    return CayleyTable(N, std::move(flat), spec.name());
  } catch (const loop_error& e) {
    fail(errc::internal_inconsistency,
         std::string("materialized extension failed table validation: ") +
             e.what());
  }
}

ScanReport lazy_is_group(const ExtensionSpec& spec, ScanPolicy policy) {
  return detail::scan_triples(
      static_cast<std::uint64_t>(spec.order()), policy, "lazy associativity",
      [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
        return spec.product_index(spec.product_index(x, y), z) !=
               spec.product_index(x, spec.product_index(y, z));
      });
}

ScanReport lazy_is_moufang(const ExtensionSpec& spec, ScanPolicy policy) {
  return detail::scan_triples(
      static_cast<std::uint64_t>(spec.order()), policy, "lazy moufang",
      [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
        return spec.product_index(spec.product_index(x, y),
                                  spec.product_index(z, x)) !=
               spec.product_index(x, spec.product_index(spec.product_index(y, z), x));
      });
}

FactorizationWitness build_factorization(const CayleyTable& G,
                                         const std::vector<int>& N, int u) {
  FactorizationWitness w{G, N, u, element_order(G, u), {}};
  std::sort(w.N.begin(), w.N.end());
  std::vector<int> upow(static_cast<std::size_t>(w.h));
  upow[0] = 0;
  for (int m = 1; m < w.h; ++m) upow[m] = G.mul(upow[m - 1], u);
  w.decomp.resize(static_cast<std::size_t>(G.order()));
  for (int m = 0; m < w.h; ++m)
    for (int x : w.N) w.decomp[G.mul(x, upow[m])].push_back({x, m});
  return w;
}

Theorem1Report verify_theorem1(const CayleyTable& G, const SubsetHandle& N,
                               int u, ScanPolicy policy) {
  if (!is_moufang(G, MoufangMode::single, policy).holds)
    throw hypothesis_error(Hypothesis::moufang, "the ambient loop is not Moufang");
  if (!is_subloop(G, N))
    throw hypothesis_error(Hypothesis::subloop, "N is not a subloop");
  if (!is_normal(G, N))
    throw hypothesis_error(Hypothesis::normality, "N is not normal");
  const int h = element_order(G, u);
  if (h % 3 == 0)
    throw hypothesis_error(Hypothesis::order_divisible_by_three,
                           "ord(u) = " + std::to_string(h) +
                               " is divisible by 3");
  const FactorizationWitness w = build_factorization(G, N.members, u);
  for (int g = 0; g < G.order(); ++g)
    if (w.decomp[g].empty())
      throw hypothesis_error(Hypothesis::generation,
                             "element " + std::to_string(g) +
                                 " is not of the form x*u^m");
  const Mapping f = conjugation_map(G, u);
  for (int x : w.N)
    if (!N.contains(f(x)))
      throw hypothesis_error(Hypothesis::action_stabilizes,
                             "conjugation by u does not stabilize N (moves " +
                                 std::to_string(x) + ")");

  const int t = cube_root_exponent(h);
  std::vector<Mapping> fpow;
  fpow.reserve(static_cast<std::size_t>(h));
  fpow.push_back(identity_mapping(G.order()));
  for (int k = 1; k < h; ++k) fpow.push_back(compose(f, fpow.back()));
  std::vector<int> upow(static_cast<std::size_t>(h));
  upow[0] = 0;
  for (int m = 1; m < h; ++m) upow[m] = G.mul(upow[m - 1], u);
  const auto F = [&](long long k) -> const Mapping& {
    const long long e = static_cast<long long>(t) * k;
    return fpow[static_cast<std::size_t>(((e % h) + h) % h)];
  };

  Theorem1Report rep;
  for (int g = 0; g < G.order(); ++g)
    for (int g2 = 0; g2 < G.order(); ++g2) {
      const int lhs = G.mul(g, g2);
      for (const auto& [x, m] : w.decomp[g])
        for (const auto& [y, n] : w.decomp[g2]) {
          ++rep.pairs_checked;
          const long long k = 2LL * m + n;
          const int inner = G.mul(F(-k)(x), F(m - n)(y));
          const int rhs = G.mul(F(k)(inner), upow[(m + n) % h]);
          if (lhs != rhs) {
            rep.pass = false;
            rep.witness = {g, g2, x, m, y, n};
            return rep;
          }
        }
    }
  rep.pass = true;
  return rep;
}

GroupCriterionReport group_criterion(const ExtensionSpec& spec,
                                     ScanPolicy policy, int cap) {
  GroupCriterionReport rep;
  rep.base_scan = is_group(spec.base(), policy);
  rep.action_class = classify(spec.base(), spec.action());
  rep.predicted = rep.base_scan.holds && rep.action_class.is_automorphism;
  const CayleyTable mat = materialize(spec, cap);
  rep.extension_scan = is_group(mat, policy);
  rep.observed = rep.extension_scan.holds;
  return rep;
}

Remark2Report verify_remark2(const CayleyTable& G, ScanPolicy policy) {
  if (!is_moufang(G, MoufangMode::single, policy).holds)
    fail(errc::not_moufang, "the loop is not Moufang");
  // F^k(g) for F = conjugation by v, small |k|.
  const auto conj_pow = [&](int v, int k, int g) {
    const int vi = G.inverse(v);
    const int c = k >= 0 ? v : vi;
    const int ci = k >= 0 ? vi : v;
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) g = G.mul(G.mul(c, g), ci);
    return g;
  };
  const auto violation = [&](int v, int x, int y) -> int {
    const int u = G.mul(G.mul(v, v), v);
    const int upow[3] = {0, u, G.mul(u, u)};
    for (int m = 0; m <= 1; ++m)
      for (int n = 0; n <= 1; ++n) {
        const int lhs = G.mul(G.mul(x, upow[m]), G.mul(y, upow[n]));
        const int k = 2 * m + n;
        const int inner = G.mul(conj_pow(v, -k, x), conj_pow(v, m - n, y));
        const int rhs = G.mul(conj_pow(v, k, inner), upow[m + n]);
        if (lhs != rhs) return 2 * m + n;
      }
    return -1;
  };
  const ScanReport scan = detail::scan_triples(
      static_cast<std::uint64_t>(G.order()), policy, "remark2",
      [&](std::uint64_t v, std::uint64_t x, std::uint64_t y) {
        return violation(static_cast<int>(v), static_cast<int>(x),
                         static_cast<int>(y)) >= 0;
      });
  Remark2Report rep;
  rep.sampled = scan.sampled;
  rep.samples = scan.samples;
  rep.seed = scan.seed;
  rep.checked = scan.checked;
  rep.pass = scan.holds;
  if (!scan.holds) {
    const int mn =
        violation(scan.witness[0], scan.witness[1], scan.witness[2]);
    rep.witness = {scan.witness[0], scan.witness[1], scan.witness[2], mn / 2,
                   mn % 2};
  }
  return rep;
}

namespace {

int mod_inverse(int a, int h) {
  if (h == 1) return 0;
  a = ((a % h) + h) % h;
  for (int b = 1; b < h; ++b)
    if (a * b % h == 1) return b;
  fail(errc::internal_inconsistency,
       std::to_string(a) + " has no inverse mod " + std::to_string(h));
}

}  // namespace

Theorem2Result theorem2_isomorphism(const CayleyTable& base, int h,
                                    const Mapping& f1, int alpha_exp,
                                    const Mapping& beta, int cap) {
  if (h < 1) fail(errc::malformed, "h must be positive");
  if (std::gcd(((alpha_exp % h) + h) % h, h) != 1)
    throw hypothesis_error(Hypothesis::automorphism,
                           "alpha_exp = " + std::to_string(alpha_exp) +
                               " is not a unit mod " + std::to_string(h));
  const MapClass beta_class = classify(base, beta);
  if (!beta_class.is_automorphism)
    throw hypothesis_error(Hypothesis::automorphism,
                           "beta is not an automorphism of the base");

  const ExtensionSpec spec1(base, h, f1);
  Mapping f2 = compose(beta, compose(power(f1, alpha_exp), invert(beta)));
  const ExtensionSpec spec2(base, h, f2);
  Theorem2Result res{false, Mapping{}, std::move(f2), materialize(spec1, cap),
                     materialize(spec2, cap), {}};

  const int nb = base.order();
  const int alpha_inv = mod_inverse(alpha_exp, h);
  std::vector<int> psi(static_cast<std::size_t>(nb) * h);
  for (int m = 0; m < h; ++m)
    for (int x = 0; x < nb; ++x)
      psi[static_cast<std::size_t>(m) * nb + x] =
          (m * alpha_inv % h) * nb + beta(x);
  res.psi = make_mapping(std::move(psi));

  const int total = nb * h;
  for (int p = 0; p < total; ++p)
    for (int q = 0; q < total; ++q)
      if (res.psi(res.g1.mul(p, q)) != res.g2.mul(res.psi(p), res.psi(q))) {
        res.pass = false;
        res.witness = {p, q};
        return res;
      }
  res.pass = true;
  return res;
}

CorollaryResult corollary_check(const CayleyTable& base, int h,
                                const Mapping& f1, const Mapping& f2,
                                SemiAutOptions opts) {
  for (const Mapping* f : {&f1, &f2}) {
    const MapClass c = classify(base, *f);
    if (!c.is_semi_automorphism)
      fail(errc::not_semi_automorphism, "f1/f2 must be semi-automorphisms");
    if (h % c.order != 0)
      fail(errc::bad_order, "action order " + std::to_string(c.order) +
                                " does not divide h = " + std::to_string(h));
  }
  const std::vector<Mapping> semis = enumerate_semiautomorphisms(base, opts);
  const int d = mapping_order(f1);
  std::vector<Mapping> f1pow;
  f1pow.reserve(static_cast<std::size_t>(d) + 1);
  f1pow.push_back(identity_mapping(base.order()));
  for (int j = 1; j <= d; ++j) f1pow.push_back(compose(f1, f1pow.back()));

  for (const Mapping& beta : semis) {
    const Mapping binv = invert(beta);
    for (int j = 1; j <= d; ++j) {
      if (std::gcd(j, d) != 1) continue;
      if (compose(beta, compose(f1pow[j], binv)) != f2) continue;

      CorollaryResult res;
      res.beta = beta;
      res.j = j;
      res.beta_is_automorphism = classify(base, beta).is_automorphism;
      if (res.beta_is_automorphism) {
        // Lift j to an exponent that is also a unit mod h (possible since
        // ord(f1) divides h); f1^j is unchanged.
        int alpha_exp = -1;
        for (int k = 0; k <= h; ++k) {
          const int e = (j + k * d) % h;
          if (e >= 1 && std::gcd(e, h) == 1) {
            alpha_exp = e;
            break;
          }
        }
        if (alpha_exp < 0)
          fail(errc::internal_inconsistency, "no unit lift of the exponent");
        res.path = CorollaryPath::theorem2;
        const Theorem2Result t2 =
            theorem2_isomorphism(base, h, f1, alpha_exp, beta);
        res.extensions_isomorphic = t2.pass;
        res.fallback_status =
            t2.pass ? IsoStatus::isomorphic : IsoStatus::indeterminate;
      } else {
        res.path = CorollaryPath::fallback_isomorphism;
        const CayleyTable g1 = materialize(ExtensionSpec(base, h, f1));
        const CayleyTable g2 = materialize(ExtensionSpec(base, h, f2));
        const IsoResult iso = are_isomorphic(g1, g2);
        res.fallback_status = iso.status;
        res.extensions_isomorphic = iso.status == IsoStatus::isomorphic;
      }
      return res;
    }
  }
  fail(errc::not_conjugate,
       "no semi-automorphism conjugates f1 into f2 (searched " +
           std::to_string(semis.size()) + " candidates)");
}

Census converse_census(
    const std::vector<std::pair<std::string, CayleyTable>>& bases,
    const std::vector<int>& orders, SemiAutOptions opts, int cap) {
  for (int h : orders)
    if (h < 1 || h % 3 == 0)
      fail(errc::coprimality_violation,
           "census order h = " + std::to_string(h) + " must be coprime to 3");
  Census census;
  struct Item {
    const std::string* base_name;
    const CayleyTable* base;
    int h;
    int action_index;
    const Mapping* action;
    bool base_group;
  };
  std::vector<Item> items;
  std::vector<std::vector<Mapping>> fixer_lists;
  fixer_lists.reserve(bases.size());
  for (const auto& [name, table] : bases) {
    const auto semis = enumerate_semiautomorphisms(table, opts);
    std::vector<Mapping> fixers;
    for (const auto& m : semis) {
      if (m(0) == 0)
        fixers.push_back(m);
      else
        census.annex.push_back({name, m});
    }
    fixer_lists.push_back(std::move(fixers));
    const bool base_group = is_group(table).holds;
    const auto& stored = fixer_lists.back();
    for (int h : orders)
      for (int i = 0; i < static_cast<int>(stored.size()); ++i)
        if (h % mapping_order(stored[i]) == 0)
          items.push_back({&name, &table, h, i, &stored[i], base_group});
  }

  census.rows.resize(items.size());
  parallel_for(items.size(), [&](std::size_t idx) {
    const Item& it = items[idx];
    CensusRow row;
    row.base = *it.base_name;
    row.h = it.h;
    row.action_index = it.action_index;
    row.action = *it.action;
    row.base_is_group = it.base_group;
    const MapClass cls = classify(*it.base, *it.action);
    row.action_is_automorphism = cls.is_automorphism;
    if (cls.is_automorphism && cls.is_anti_automorphism)
      row.action_class = "BOTH";
    else if (cls.is_automorphism)
      row.action_class = "AUTO";
    else if (cls.is_anti_automorphism)
      row.action_class = "ANTI";
    else
      row.action_class = "PROPER";
    try {
      const ExtensionSpec spec(*it.base, it.h, *it.action);
      const CayleyTable mat = materialize(spec, cap);
      const ScanReport grp = is_group(mat);
      row.ops = grp.checked;
      if (grp.holds) {
        row.result_class = "GROUP";
      } else {
        const ScanReport mouf = is_moufang(mat);
        row.ops += mouf.checked;
        row.result_class = mouf.holds ? "MOUFANG_NONASSOC" : "NON_MOUFANG";
      }
    } catch (const loop_error& e) {
      if (e.code() != errc::cap_exceeded) throw;
      row.result_class = "SKIPPED";
      row.ops = 0;
    }
    census.rows[idx] = std::move(row);
  });
  return census;
}

}  // namespace loopforge
