#pragma once

#include <cstdint>
#include <vector>

#include "loopforge/cayley_table.hpp"
#include "loopforge/scan.hpp"

namespace loopforge {

// Associativity over all (or sampled) triples. A loop is a group iff this
// holds.
ScanReport is_group(const CayleyTable& L, ScanPolicy policy = {});

enum class MoufangMode { single, all_four };

// single: (xy)(zx) = x((yz)x). all_four additionally scans the other three
// equivalent identities; if their loop-level verdicts ever disagree the
// checker itself is broken and internal-inconsistency is raised.
ScanReport is_moufang(const CayleyTable& L, MoufangMode mode = MoufangMode::single,
                      ScanPolicy policy = {});

// Pair scan; witness = (x, y) with xy != yx.
ScanReport is_commutative(const CayleyTable& L);

// Least k >= 1 with x^k = 0, powers taken as the common value of the left
// and right chains; raises not-power-associative if the chains diverge
// before reaching the identity.
int element_order(const CayleyTable& L, int x);

// lcm of all element orders.
int exponent(const CayleyTable& L);

bool is_power_associative(const CayleyTable& L);

// Sorted element orders; the isomorphism-invariant order profile.
std::vector<int> order_profile(const CayleyTable& L);

// Elements associating with every pair in all three positions.
SubsetHandle nucleus(const CayleyTable& L, ScanPolicy policy = {});

// nucleus intersected with the commuting elements.
SubsetHandle center(const CayleyTable& L, ScanPolicy policy = {});

}  // namespace loopforge
