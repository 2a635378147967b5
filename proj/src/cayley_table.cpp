#include "loopforge/cayley_table.hpp"

#include <algorithm>

namespace loopforge {

CayleyTable::CayleyTable(int order, std::vector<int> flat, std::string name)
    : n_(order), table_(std::move(flat)), name_(std::move(name)) {
  if (n_ <= 0) fail(errc::malformed, "order must be positive");
  if (table_.size() != static_cast<std::size_t>(n_) * n_)
    fail(errc::malformed, "table has " + std::to_string(table_.size()) +
                              " entries, expected " + std::to_string(n_) + "x" +
                              std::to_string(n_));
  for (int v : table_)
    if (v < 0 || v >= n_)
      fail(errc::malformed, "entry " + std::to_string(v) + " out of range 0.." +
                                std::to_string(n_ - 1));

  std::vector<char> seen(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n_; ++y) {
      const int v = mul(x, y);
      if (seen[v])
        fail(errc::not_latin_square, "row " + std::to_string(x) +
                                         " repeats value " + std::to_string(v));
      seen[v] = 1;
    }
  }
  for (int y = 0; y < n_; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < n_; ++x) {
      const int v = mul(x, y);
      if (seen[v])
        fail(errc::not_latin_square, "column " + std::to_string(y) +
                                         " repeats value " + std::to_string(v));
      seen[v] = 1;
    }
  }

  for (int x = 0; x < n_; ++x)
    if (mul(0, x) != x || mul(x, 0) != x)
      fail(errc::no_identity, "element 0 is not a two-sided identity");

  rinv_.resize(n_);
  linv_.resize(n_);
  for (int x = 0; x < n_; ++x) {
    rinv_[x] = left_div(x, 0);
    linv_[x] = right_div(x, 0);
  }
}

int CayleyTable::left_div(int x, int y) const {
  const std::size_t row = static_cast<std::size_t>(x) * n_;
  for (int z = 0; z < n_; ++z)
    if (table_[row + z] == y) return z;
  fail(errc::internal_inconsistency, "left_div found no solution");
}

int CayleyTable::right_div(int x, int y) const {
  for (int z = 0; z < n_; ++z)
    if (table_[static_cast<std::size_t>(z) * n_ + x] == y) return z;
  fail(errc::internal_inconsistency, "right_div found no solution");
}

int CayleyTable::inverse_mismatch_witness() const {
  for (int x = 0; x < n_; ++x)
    if (rinv_[x] != linv_[x]) return x;
  return -1;
}

CayleyTable CayleyTable::relabeled(const std::vector<int>& perm,
                                   std::string name) const {
  if (perm.size() != static_cast<std::size_t>(n_))
    fail(errc::malformed, "relabeling has wrong degree");
  std::vector<int> out(table_.size());
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      out[static_cast<std::size_t>(perm[x]) * n_ + perm[y]] = perm[mul(x, y)];
  return CayleyTable(n_, std::move(out), name.empty() ? name_ : std::move(name));
}

CayleyTable CayleyTable::with_name(std::string name) const {
  CayleyTable copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool SubsetHandle::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

int SubsetHandle::position(int x) const {
  const auto it = std::lower_bound(members.begin(), members.end(), x);
  if (it == members.end() || *it != x) return -1;
  return static_cast<int>(it - members.begin());
}

SubsetHandle make_subset(const CayleyTable& parent, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 0 || members[i] >= parent.order())
      fail(errc::malformed, "subset member " + std::to_string(members[i]) +
                                " out of range");
    if (i > 0 && members[i] == members[i - 1])
      fail(errc::malformed,
           "duplicate subset member " + std::to_string(members[i]));
  }
  return SubsetHandle{&parent, std::move(members)};
}

}  // namespace loopforge
