#pragma once

#include <stdexcept>
#include <string>

namespace loopforge {

enum class errc {
  malformed,
  not_latin_square,
  no_identity,
  cap_exceeded,
  not_power_associative,
  not_a_subloop,
  not_normal,
  ill_defined,
  parent_mismatch,
  ambiguous_conjugation,
  budget_exhausted,
  coprimality_violation,
  hypothesis_violation,
  not_a_group,
  not_prime,
  bad_order,
  not_moufang,
  moves_identity,
  not_semi_automorphism,
  not_conjugate,
  internal_inconsistency,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::malformed: return "malformed";
    case errc::not_latin_square: return "not-latin-square";
    case errc::no_identity: return "no-identity";
    case errc::cap_exceeded: return "cap-exceeded";
    case errc::not_power_associative: return "not-power-associative";
    case errc::not_a_subloop: return "not-a-subloop";
    case errc::not_normal: return "not-normal";
    case errc::ill_defined: return "ill-defined";
    case errc::parent_mismatch: return "parent-mismatch";
    case errc::ambiguous_conjugation: return "ambiguous-conjugation";
    case errc::budget_exhausted: return "budget-exhausted";
    case errc::coprimality_violation: return "coprimality-violation";
    case errc::hypothesis_violation: return "hypothesis-violation";
    case errc::not_a_group: return "not-a-group";
    case errc::not_prime: return "not-prime";
    case errc::bad_order: return "bad-order";
    case errc::not_moufang: return "not-moufang";
    case errc::moves_identity: return "moves-identity";
    case errc::not_semi_automorphism: return "not-semi-automorphism";
    case errc::not_conjugate: return "not-conjugate";
    case errc::internal_inconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

class loop_error : public std::runtime_error {
 public:
  loop_error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw loop_error(code, what);
}

// Which hypothesis of the factorization theorem failed. Names double as the
// diagnostic strings printed by the CLI.
enum class Hypothesis {
  moufang,
  normality,
  subloop,
  generation,
  order_divisible_by_three,
  action_stabilizes,
  two_sided_inverse,
  automorphism,
  semi_automorphism,
  coprime_exponent,
};

inline const char* hypothesis_name(Hypothesis h) {
  switch (h) {
    case Hypothesis::moufang: return "not-moufang";
    case Hypothesis::normality: return "not-normal";
    case Hypothesis::subloop: return "not-a-subloop";
    case Hypothesis::generation: return "not-generating";
    case Hypothesis::order_divisible_by_three: return "order-divisible-by-3";
    case Hypothesis::action_stabilizes: return "action-does-not-stabilize";
    case Hypothesis::two_sided_inverse: return "no-two-sided-inverse";
    case Hypothesis::automorphism: return "not-an-automorphism";
    case Hypothesis::semi_automorphism: return "not-a-semi-automorphism";
    case Hypothesis::coprime_exponent: return "exponent-not-coprime";
  }
  return "unknown";
}

class hypothesis_error : public loop_error {
 public:
  hypothesis_error(Hypothesis which, const std::string& what)
      : loop_error(errc::hypothesis_violation,
                   std::string(hypothesis_name(which)) + ": " + what),
        which_(which) {}

  Hypothesis which() const noexcept { return which_; }

 private:
  Hypothesis which_;
};

}  // namespace loopforge
