#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "loopforge/mapping.hpp"

namespace loopforge {

enum class IsoStatus { isomorphic, not_isomorphic, indeterminate };

struct IsoResult {
  IsoStatus status = IsoStatus::indeterminate;
  // A-to-B isomorphism when status is isomorphic.
  std::optional<Mapping> witness;
  std::uint64_t nodes = 0;
  // Invariant that separated the tables, empty unless it decided.
  std::string screened_by;
};

// Invariant screen (order, commutativity, associativity on small tables,
// nucleus and center sizes, element order profile, translation cycle types)
// followed by generator-image backtracking with closure propagation.
// Budget exhaustion reports indeterminate, never a false negative.
IsoResult are_isomorphic(const CayleyTable& A, const CayleyTable& B,
                         std::uint64_t budget = 50'000'000);

}  // namespace loopforge
