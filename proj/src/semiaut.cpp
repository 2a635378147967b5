#include "loopforge/semiaut.hpp"

#include <algorithm>

namespace loopforge {

namespace {

// Image-assignment backtracker shared by the semi-automorphism and
// automorphism enumerations. `semi` selects the propagated law.
class Enumerator {
 public:
  Enumerator(const CayleyTable& L, bool semi, std::uint64_t budget)
      : L_(L),
        semi_(semi),
        budget_(budget),
        img_(static_cast<std::size_t>(L.order()), -1),
        used_(static_cast<std::size_t>(L.order()), 0) {}

  std::vector<Mapping> run(bool identity_fixing_only) {
    if (identity_fixing_only) {
      if (try_assign(0, 0)) dfs();
      undo_to(0);
    } else {
      dfs();
    }
    std::sort(results_.begin(), results_.end());
    return std::move(results_);
  }

 private:
  bool try_assign(int x, int v) {
    const std::size_t mark = trail_.size();
    if (!assign(x, v) || !propagate(mark)) {
      undo_to(mark);
      return false;
    }
    return true;
  }

  bool assign(int x, int v) {
    if (img_[x] >= 0) return img_[x] == v;
    if (used_[v]) return false;
    if (++nodes_ > budget_)
      fail(errc::budget_exhausted,
           "enumeration stopped after " + std::to_string(nodes_) +
               " assignments with " + std::to_string(results_.size()) +
               " mappings found");
    img_[x] = v;
    used_[v] = 1;
    trail_.push_back(x);
    return true;
  }

  // Processes trail entries from `from` onward; forced assignments extend
  // the trail and are processed in turn.
  bool propagate(std::size_t from) {
    for (std::size_t i = from; i < trail_.size(); ++i) {
      const int a = trail_[i];
      for (std::size_t j = 0; j <= i; ++j) {
        const int b = trail_[j];
        if (!constrain(a, b) || !constrain(b, a)) return false;
      }
    }
    return true;
  }

  // Both images known; forces the images the law dictates.
  bool constrain(int p, int q) {
    const int fp = img_[p], fq = img_[q];
    if (semi_) {
      return assign(L_.mul(L_.mul(p, q), p), L_.mul(L_.mul(fp, fq), fp)) &&
             assign(L_.mul(p, L_.mul(q, p)), L_.mul(fp, L_.mul(fq, fp)));
    }
    return assign(L_.mul(p, q), L_.mul(fp, fq));
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const int x = trail_.back();
      trail_.pop_back();
      used_[img_[x]] = 0;
      img_[x] = -1;
    }
  }

  void dfs() {
    int x = -1;
    for (int i = 0; i < L_.order(); ++i)
      if (img_[i] < 0) {
        x = i;
        break;
      }
    if (x < 0) {
      if (full_check()) results_.push_back(Mapping{img_});
      return;
    }
    for (int v = 0; v < L_.order(); ++v) {
      if (used_[v]) continue;
      const std::size_t mark = trail_.size();
      if (try_assign(x, v)) dfs();
      undo_to(mark);
    }
  }

  // Propagation handles every pair, but a full verification at the leaf
  // keeps the search honest.
  bool full_check() const {
    const int n = L_.order();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int fa = img_[a], fb = img_[b];
        if (semi_) {
          if (img_[L_.mul(L_.mul(a, b), a)] != L_.mul(L_.mul(fa, fb), fa))
            return false;
          if (img_[L_.mul(a, L_.mul(b, a))] != L_.mul(fa, L_.mul(fb, fa)))
            return false;
        } else {
          if (img_[L_.mul(a, b)] != L_.mul(fa, fb)) return false;
        }
      }
    return true;
  }

  const CayleyTable& L_;
  bool semi_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> img_;
  std::vector<char> used_;
  std::vector<int> trail_;
  std::vector<Mapping> results_;
};

void verify_group_closure(const std::vector<Mapping>& maps) {
  const auto member = [&](const Mapping& m) {
    return std::binary_search(maps.begin(), maps.end(), m);
  };
  for (const auto& m : maps)
    if (!member(invert(m)))
      fail(errc::internal_inconsistency,
           "semi-automorphism list not closed under inversion");
  for (const auto& a : maps)
    for (const auto& b : maps)
      if (!member(compose(a, b)))
        fail(errc::internal_inconsistency,
             "semi-automorphism list not closed under composition");
}

}  // namespace

std::vector<Mapping> enumerate_semiautomorphisms(const CayleyTable& L,
                                                 SemiAutOptions opts) {
  Enumerator e(L, true, opts.budget);
  auto maps = e.run(opts.identity_fixing_only);
  verify_group_closure(maps);
  return maps;
}

std::vector<Mapping> enumerate_automorphisms(const CayleyTable& L,
                                             std::uint64_t budget) {
  Enumerator e(L, false, budget);
  return e.run(false);
}

std::vector<InnerGenerator> inner_generators(const CayleyTable& L,
                                             ScanPolicy policy) {
  const int n = L.order();
  if (n > policy.cap)
    fail(errc::cap_exceeded, "inner generators: order " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(policy.cap));
  std::vector<InnerGenerator> out;
  out.reserve(static_cast<std::size_t>(n) * n * 2 + n);
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int yx = L.mul(y, x);
      for (int g = 0; g < n; ++g)
        images[g] = L.left_div(yx, L.mul(y, L.mul(x, g)));
      out.push_back({make_mapping(images), 'L', x, y});
      const int xy = L.mul(x, y);
      for (int g = 0; g < n; ++g)
        images[g] = L.right_div(xy, L.mul(L.mul(g, x), y));
      out.push_back({make_mapping(images), 'R', x, y});
    }
  for (int x = 0; x < n; ++x) {
    for (int g = 0; g < n; ++g) images[g] = L.left_div(x, L.mul(g, x));
    out.push_back({make_mapping(images), 'T', x, -1});
  }
  return out;
}

}  // namespace loopforge
