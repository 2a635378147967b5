#pragma once

#include <string>
#include <vector>

#include "loopforge/errors.hpp"

namespace loopforge {

// Dense multiplication table of a finite loop. Element 0 is always the
// two-sided identity; construction rejects anything that is not a Latin
// square with identity at 0. Immutable after construction.
class CayleyTable {
 public:
  CayleyTable(int order, std::vector<int> flat, std::string name = "");

  int order() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<int>& flat() const noexcept { return table_; }

  int mul(int x, int y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }

  // Unique z with x * z == y.
  int left_div(int x, int y) const;
  // Unique z with z * x == y.
  int right_div(int x, int y) const;

  // Right inverse: mul(x, inverse(x)) == 0. Coincides with the left inverse
  // exactly when two_sided_inverses() holds.
  int inverse(int x) const { return rinv_[x]; }
  int left_inverse(int x) const { return linv_[x]; }
  bool two_sided_inverses() const noexcept { return rinv_ == linv_; }
  // Smallest x with differing left/right inverse, or -1.
  int inverse_mismatch_witness() const;

  // New table with element x renamed to perm[x].
  CayleyTable relabeled(const std::vector<int>& perm, std::string name = "") const;

  bool same_table(const CayleyTable& o) const {
    return n_ == o.n_ && table_ == o.table_;
  }

  CayleyTable with_name(std::string name) const;

 private:
  int n_;
  std::vector<int> table_;
  std::vector<int> rinv_;
  std::vector<int> linv_;
  std::string name_;
};

// Validated view of a subset of a loop's elements. Members are sorted and
// duplicate-free; the handle does not own the parent table.
struct SubsetHandle {
  const CayleyTable* parent = nullptr;
  std::vector<int> members;

  int size() const noexcept { return static_cast<int>(members.size()); }
  bool contains(int x) const;
  // Position of x in members, or -1.
  int position(int x) const;
};

// Sorts, checks range and duplicates.
SubsetHandle make_subset(const CayleyTable& parent, std::vector<int> members);

}  // namespace loopforge
