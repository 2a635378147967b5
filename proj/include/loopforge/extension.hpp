#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopforge/isomorphism.hpp"
#include "loopforge/loop_checks.hpp"
#include "loopforge/mapping.hpp"
#include "loopforge/semiaut.hpp"

namespace loopforge {

// Unique t in 0..h-1 with 3t = 1 (mod h); requires gcd(h,3) = 1. Fractional
// exponents k/3 are then realized as t*k.
int cube_root_exponent(int h);

struct ExtElement {
  int x = 0;  // base element
  int m = 0;  // exponent of the cyclic generator, 0..h-1
};

// Data of the cyclic semidirect product of a base loop N by Z_h acting via
// a semi-automorphism f:
//   (x,u^m)(y,u^n) = (F^{2m+n}( F^{-(2m+n)}(x) * F^{m-n}(y) ), u^{m+n}),
// F = f^t the cube root of f. Products evaluate lazily; materialize() emits
// the dense table when small enough.
class ExtensionSpec {
 public:
  // Validates: gcd(h,3)=1; degree match; f fixes the identity; f is a
  // semi-automorphism of base; ord(f) divides h.
  ExtensionSpec(CayleyTable base, int h, Mapping action, std::string name = "");

  const CayleyTable& base() const noexcept { return base_; }
  int h() const noexcept { return h_; }
  const Mapping& action() const noexcept { return pow_[1 % h_]; }
  int t() const noexcept { return t_; }
  const std::string& name() const noexcept { return name_; }
  long long order() const noexcept {
    return static_cast<long long>(base_.order()) * h_;
  }

  const Mapping& action_power(long long k) const;  // f^(k mod h)
  const Mapping& third_power(long long k) const;   // (f^t)^k

  ExtElement product(const ExtElement& a, const ExtElement& b) const;

  // Element (x, m) lives at flat index m*|N| + x; (0,0) is the identity.
  long long index_of(const ExtElement& e) const {
    return static_cast<long long>(e.m) * base_.order() + e.x;
  }
  ExtElement element_at(long long idx) const {
    return ExtElement{static_cast<int>(idx % base_.order()),
                      static_cast<int>(idx / base_.order())};
  }
  long long product_index(long long i, long long j) const {
    return index_of(product(element_at(i), element_at(j)));
  }

 private:
  CayleyTable base_;
  int h_;
  int t_;
  std::string name_;
  std::vector<Mapping> pow_;  // f^0 .. f^{h-1}
};

CayleyTable materialize(const ExtensionSpec& spec, int cap = 4096);

// Scans on the lazy product, for extensions too large to materialize.
ScanReport lazy_is_group(const ExtensionSpec& spec, ScanPolicy policy);
ScanReport lazy_is_moufang(const ExtensionSpec& spec, ScanPolicy policy);

// All ways of writing every element of G as x * u^m with x in N,
// 0 <= m < ord(u).
struct FactorizationWitness {
  CayleyTable G;
  std::vector<int> N;  // sorted members
  int u = 0;
  int h = 0;  // order of u
  std::vector<std::vector<std::pair<int, int>>> decomp;  // per element of G
};

FactorizationWitness build_factorization(const CayleyTable& G,
                                         const std::vector<int>& N, int u);

struct Theorem1Report {
  bool pass = false;
  // (g, g', x, m, y, n) of the first factored product that disagrees with
  // the closed-form right-hand side; empty on pass.
  std::vector<int> witness;
  std::uint64_t pairs_checked = 0;
};

// Checks the factorization law g*g' = F^{2m+n}(F^{-(2m+n)}(x) F^{m-n}(y))
// u^{m+n}, f = conjugation by u, over EVERY pair of decompositions.
// Hypothesis failures (not Moufang, N not normal, N<u> not all of G, 3
// divides ord(u), conjugation not stabilizing N) raise hypothesis_error.
Theorem1Report verify_theorem1(const CayleyTable& G, const SubsetHandle& N,
                               int u, ScanPolicy policy = {});

struct GroupCriterionReport {
  bool predicted = false;  // base is a group and the action an automorphism
  bool observed = false;   // the materialized extension is a group
  ScanReport base_scan;
  ScanReport extension_scan;
  MapClass action_class;
};

GroupCriterionReport group_criterion(const ExtensionSpec& spec,
                                     ScanPolicy policy = {}, int cap = 4096);

struct Remark2Report {
  bool pass = true;
  // (v, x, y, m, n): the cube u = v^3 instance that broke the law.
  std::vector<int> witness;
  bool sampled = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t checked = 0;
};

// For all v, x, y (u := v^3, f := conj by u, cube root := conj by v) checks
// the factorization law for exponents m, n in {0,1}. Requires G Moufang.
Remark2Report verify_remark2(const CayleyTable& G, ScanPolicy policy = {});

struct Theorem2Result {
  bool pass = false;
  Mapping psi;  // index map between the materialized extensions
  Mapping f2;   // beta o f1^alpha_exp o beta^-1
  CayleyTable g1;
  CayleyTable g2;
  std::vector<int> witness;  // failing index pair, empty on pass
};

// Builds the second action f2 = beta o f1^alpha_exp o beta^-1 and the map
// psi(x, u^m) = (beta(x), u^(m * alpha_exp^-1)), then verifies psi is an
// isomorphism of the two materialized extensions. alpha_exp must be a unit
// mod h and beta an automorphism of base; violations raise hypothesis_error.
Theorem2Result theorem2_isomorphism(const CayleyTable& base, int h,
                                    const Mapping& f1, int alpha_exp,
                                    const Mapping& beta, int cap = 4096);

enum class CorollaryPath { theorem2, fallback_isomorphism };

struct CorollaryResult {
  Mapping beta;
  int j = 0;  // f2 = beta o f1^j o beta^-1, gcd(j, ord(f1)) = 1
  bool beta_is_automorphism = false;
  CorollaryPath path = CorollaryPath::theorem2;
  bool extensions_isomorphic = false;
  IsoStatus fallback_status = IsoStatus::indeterminate;
};

// Searches the enumerated semi-automorphism group for a conjugator taking
// f1 to f2. An automorphism conjugator goes through the exponent-twisted
// isomorphism construction; a proper semi-automorphism conjugator falls
// back to a direct isomorphism search, and the result records which path
// ran. No conjugator at all raises not-conjugate.
CorollaryResult corollary_check(const CayleyTable& base, int h,
                                const Mapping& f1, const Mapping& f2,
                                SemiAutOptions opts = {});

struct CensusRow {
  std::string base;
  int h = 0;
  // Position in the lex-sorted identity-fixing semi-automorphism list.
  int action_index = 0;
  Mapping action;
  std::string action_class;  // AUTO | ANTI | BOTH | PROPER
  std::string result_class;  // GROUP | MOUFANG_NONASSOC | NON_MOUFANG | SKIPPED
  bool base_is_group = false;
  bool action_is_automorphism = false;
  // Deterministic work metric (tuples evaluated), not wall time.
  std::uint64_t ops = 0;
};

struct CensusAnnexRow {
  std::string base;
  Mapping action;  // identity-moving semi-automorphism, excluded from rows
};

struct Census {
  std::vector<CensusRow> rows;
  std::vector<CensusAnnexRow> annex;
};

// For every base and h, one row per identity-fixing semi-automorphism with
// order dividing h: materialize the extension and classify it. Rows too
// large to materialize are marked SKIPPED. Identity-moving semi-automorphisms
// are reported once per base in the annex.
Census converse_census(const std::vector<std::pair<std::string, CayleyTable>>& bases,
                       const std::vector<int>& orders, SemiAutOptions opts = {},
                       int cap = 4096);

}  // namespace loopforge
