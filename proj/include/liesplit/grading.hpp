#pragma once

#include <map>
#include <set>
#include <vector>

#include "liesplit/element.hpp"
#include "liesplit/rootsys.hpp"

namespace liesplit {

/// Parabolic gradation attached to one marked simple root: the level of a
/// root is its coefficient over the marked node. Immutable once built.
class Gradation {
 public:
  static Gradation make(RootSystemPtr sys, int marked);

  const RootSystem& sys() const { return *sys_; }
  RootSystemPtr sys_ptr() const { return sys_; }
  int marked() const { return marked_; }
  int depth() const { return depth_; }

  int level_of(int root_idx) const {
    return sys_->root(root_idx).simple_coeffs[marked_ - 1];
  }
  /// Root indices at a level; empty for |k| > depth.
  const std::vector<int>& level(int k) const;
  /// dim g_k: number of roots at level k, plus the rank at k = 0.
  int level_dim(int k) const;

  /// The grading coweight: <alpha, eta0> = level(alpha) for every root.
  const RatVec& eta0() const { return eta0_; }

  std::string case_name() const;  // e.g. "(D5,a3)"

 private:
  RootSystemPtr sys_;
  int marked_ = 0;
  int depth_ = 0;
  std::map<int, std::vector<int>> levels_;
  RatVec eta0_;
};

Gradation grade(RootSystemPtr sys, int marked);

/// Action of the grading element: multiplies each root coefficient by its
/// level and kills the Cartan part.
template <class F>
AlgebraElem<F> eta0_action(const Gradation& g, const AlgebraElem<F>& z) {
  AlgebraElem<F> out(g.sys().rank());
  for (const auto& [idx, c] : z.coeffs) {
    int k = g.level_of(idx);
    if (k != 0 && !is_zero(c)) out.coeffs.emplace(idx, F(k) * c);
  }
  return out;
}

/// Positive levels k on which the bracket vanishes identically: no two
/// roots of Delta_k sum to a root. Always contains every k > depth/2.
std::set<int> abelian_levels(const Gradation& g);

}  // namespace liesplit
