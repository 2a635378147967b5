#include "loopforge/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "loopforge/loop_checks.hpp"

namespace loopforge {

namespace {

// Per-element invariant: (power order or 0, cycle type of left translation,
// cycle type of right translation). Preserved by any isomorphism.
struct Fingerprint {
  int ord = 0;
  std::vector<int> left_cycles;
  std::vector<int> right_cycles;

  bool operator==(const Fingerprint& o) const {
    return ord == o.ord && left_cycles == o.left_cycles &&
           right_cycles == o.right_cycles;
  }
  bool operator<(const Fingerprint& o) const {
    return std::tie(ord, left_cycles, right_cycles) <
           std::tie(o.ord, o.left_cycles, o.right_cycles);
  }
};

std::vector<int> cycle_type(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> cycles;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    int len = 0, y = x;
    while (!seen[y]) {
      seen[y] = 1;
      y = perm[y];
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

int order_or_zero(const CayleyTable& L, int x) {
  int l = x, r = x;
  for (int k = 1; k <= L.order(); ++k) {
    if (l != r) return 0;
    if (l == 0) return k;
    l = L.mul(l, x);
    r = L.mul(x, r);
  }
  return 0;
}

std::vector<Fingerprint> fingerprints(const CayleyTable& L) {
  const int n = L.order();
  std::vector<Fingerprint> out(static_cast<std::size_t>(n));
  std::vector<int> trans(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    out[x].ord = order_or_zero(L, x);
    for (int g = 0; g < n; ++g) trans[g] = L.mul(x, g);
    out[x].left_cycles = cycle_type(trans);
    for (int g = 0; g < n; ++g) trans[g] = L.mul(g, x);
    out[x].right_cycles = cycle_type(trans);
  }
  return out;
}

// Greedy generating sequence: each pick maximizes closure growth, ties to
// the smallest element. Keeps the backtracking depth near log(n).
std::vector<int> generating_sequence(const CayleyTable& L) {
  const int n = L.order();
  std::vector<char> closed(static_cast<std::size_t>(n), 0);
  std::vector<int> members;
  const auto close_over = [&](std::vector<char>& in, std::vector<int>& list,
                              int extra) {
    if (!in[extra]) {
      in[extra] = 1;
      list.push_back(extra);
    }
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        for (int p : {L.mul(list[i], list[j]), L.mul(list[j], list[i])})
          if (!in[p]) {
            in[p] = 1;
            list.push_back(p);
          }
      }
  };
  closed[0] = 1;
  members.push_back(0);
  std::vector<int> gens;
  while (static_cast<int>(members.size()) < n) {
    int best = -1, best_size = -1;
    for (int x = 0; x < n; ++x) {
      if (closed[x]) continue;
      std::vector<char> in = closed;
      std::vector<int> list = members;
      close_over(in, list, x);
      if (static_cast<int>(list.size()) > best_size) {
        best_size = static_cast<int>(list.size());
        best = x;
      }
    }
    gens.push_back(best);
    close_over(closed, members, best);
  }
  return gens;
}

class Search {
 public:
  Search(const CayleyTable& A, const CayleyTable& B,
         const std::vector<Fingerprint>& fa, const std::vector<Fingerprint>& fb,
         std::uint64_t budget)
      : A_(A),
        B_(B),
        fa_(fa),
        fb_(fb),
        budget_(budget),
        img_(static_cast<std::size_t>(A.order()), -1),
        used_(static_cast<std::size_t>(A.order()), 0) {}

  // nullopt = budget exhausted; empty mapping = exhausted search space.
  std::optional<Mapping> run(const std::vector<int>& gens) {
    img_[0] = 0;  // isomorphisms fix the identity
    used_[0] = 1;
    trail_.push_back(0);
    if (!propagate(0)) return Mapping{};
    exhausted_ = false;
    const bool found = dfs(gens, 0);
    if (found) return Mapping{img_};
    return exhausted_ ? std::nullopt : std::optional<Mapping>(Mapping{});
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool dfs(const std::vector<int>& gens, std::size_t depth) {
    if (depth == gens.size()) return full_check();
    const int g = gens[depth];
    if (img_[g] >= 0) return dfs(gens, depth + 1);
    for (int v = 0; v < B_.order(); ++v) {
      if (used_[v] || !(fa_[g] == fb_[v])) continue;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      const std::size_t mark = trail_.size();
      img_[g] = v;
      used_[v] = 1;
      trail_.push_back(g);
      if (propagate(mark) && dfs(gens, depth + 1)) return true;
      undo_to(mark);
      if (exhausted_) return false;
    }
    return false;
  }

  // img_[a*b] must be img_[a]*img_[b]; forced images cascade through the
  // trail.
  bool propagate(std::size_t from) {
    for (std::size_t i = from; i < trail_.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        if (!force(trail_[i], trail_[j]) || !force(trail_[j], trail_[i]))
          return false;
      }
    return true;
  }

  bool force(int a, int b) {
    const int p = A_.mul(a, b);
    const int v = B_.mul(img_[a], img_[b]);
    if (img_[p] >= 0) return img_[p] == v;
    if (used_[v] || !(fa_[p] == fb_[v])) return false;
    img_[p] = v;
    used_[v] = 1;
    trail_.push_back(p);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const int x = trail_.back();
      trail_.pop_back();
      used_[img_[x]] = 0;
      img_[x] = -1;
    }
  }

  bool full_check() const {
    for (int x = 0; x < A_.order(); ++x) {
      if (img_[x] < 0) return false;
      for (int y = 0; y < A_.order(); ++y)
        if (img_[A_.mul(x, y)] != B_.mul(img_[x], img_[y])) return false;
    }
    return true;
  }

  const CayleyTable& A_;
  const CayleyTable& B_;
  const std::vector<Fingerprint>& fa_;
  const std::vector<Fingerprint>& fb_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<int> img_;
  std::vector<char> used_;
  std::vector<int> trail_;
};

}  // namespace

IsoResult are_isomorphic(const CayleyTable& A, const CayleyTable& B,
                         std::uint64_t budget) {
  IsoResult res;
  if (A.order() != B.order()) {
    res.status = IsoStatus::not_isomorphic;
    res.screened_by = "order";
    return res;
  }
  const int n = A.order();
  if (is_commutative(A).holds != is_commutative(B).holds) {
    res.status = IsoStatus::not_isomorphic;
    res.screened_by = "commutativity";
    return res;
  }
  if (n <= 128) {
    if (is_group(A).holds != is_group(B).holds) {
      res.status = IsoStatus::not_isomorphic;
      res.screened_by = "associativity";
      return res;
    }
    if (nucleus(A).size() != nucleus(B).size() ||
        center(A).size() != center(B).size()) {
      res.status = IsoStatus::not_isomorphic;
      res.screened_by = "nucleus-center-size";
      return res;
    }
  }
  const auto fa = fingerprints(A);
  const auto fb = fingerprints(B);
  {
    auto sa = fa, sb = fb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (!(std::equal(sa.begin(), sa.end(), sb.begin(), sb.end(),
                     [](const Fingerprint& x, const Fingerprint& y) {
                       return x == y;
                     }))) {
      res.status = IsoStatus::not_isomorphic;
      res.screened_by = "element-invariants";
      return res;
    }
  }
  Search search(A, B, fa, fb, budget);
  const auto found = search.run(generating_sequence(A));
  res.nodes = search.nodes();
  if (!found) {
    res.status = IsoStatus::indeterminate;
    return res;
  }
  if (found->degree() == 0) {
    res.status = IsoStatus::not_isomorphic;
    res.screened_by = "search-exhausted";
    return res;
  }
  res.status = IsoStatus::isomorphic;
  res.witness = *found;
  return res;
}

}  // namespace loopforge
