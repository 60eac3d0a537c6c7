#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "liesplit/element.hpp"
#include "liesplit/rootsys.hpp"

namespace liesplit {

/// Integer structure constants N(a,b) for a Chevalley basis, normalized so
/// that [e_a, e_{-a}] = h_a (the coroot). Signs are pinned by forcing the
/// extraspecial pair of every positive root to be positive, extraspecial
/// taken with respect to the canonical lexicographic root order; any such
/// choice yields the same algebra up to basis signs.
class StructureConstants {
 public:
  static std::shared_ptr<const StructureConstants> build(RootSystemPtr sys);

  const RootSystem& sys() const { return *sys_; }
  RootSystemPtr sys_ptr() const { return sys_; }

  /// N(a,b) with [e_a, e_b] = N(a,b) e_{a+b}; zero when a+b is not a root.
  int n_constant(int a_idx, int b_idx) const {
    return n_[static_cast<std::size_t>(a_idx) * num_ + b_idx];
  }
  /// Index of a+b if it is a root, else -1.
  int sum_index(int a_idx, int b_idx) const {
    return sum_[static_cast<std::size_t>(a_idx) * num_ + b_idx];
  }

  template <class F>
  AlgebraElem<F> bracket(const AlgebraElem<F>& x,
                         const AlgebraElem<F>& y) const;

  /// exp(t ad e_phi) applied to x; a finite sum since ad e_phi is nilpotent.
  template <class F>
  AlgebraElem<F> ad_exp(int phi_idx, const F& t, const AlgebraElem<F>& x) const;

  /// Torus action: root coefficients scale by lambda^{<a,h>}. Requires
  /// integral exponents on the support so the result stays in the field.
  template <class F>
  AlgebraElem<F> torus_scale(const RatVec& h, const F& lambda,
                             const AlgebraElem<F>& x) const;

 private:
  StructureConstants() = default;

  RootSystemPtr sys_;
  std::size_t num_ = 0;
  std::vector<int> n_;
  std::vector<int> sum_;
};

using StructureConstantsPtr = std::shared_ptr<const StructureConstants>;

// --- templates ---

template <class F>
AlgebraElem<F> StructureConstants::bracket(const AlgebraElem<F>& x,
                                           const AlgebraElem<F>& y) const {
  const int rank = sys_->rank();
  AlgebraElem<F> out(rank);

  auto cartan_on_roots = [&](const std::vector<F>& h, const AlgebraElem<F>& z,
                             bool negate) {
    if (h.empty()) return;
    for (const auto& [idx, c] : z.coeffs) {
      if (is_zero(c)) continue;
      F pair(0);
      for (int q = 0; q < rank; ++q) {
        long ci = sys_->cartan_integer(idx, sys_->simple_index(q + 1));
        if (ci != 0) pair += h[q] * F(ci);
      }
      if (is_zero(pair)) continue;
      F add = pair * c;
      if (negate) add = -add;
      auto [it, fresh] = out.coeffs.emplace(idx, add);
      if (!fresh) it->second += add;
    }
  };
  cartan_on_roots(x.cartan, y, false);  // [h_x, y_roots]
  cartan_on_roots(y.cartan, x, true);   // [x_roots, h_y] = -[h_y, x_roots]

  for (const auto& [ia, ca] : x.coeffs) {
    if (is_zero(ca)) continue;
    for (const auto& [ib, cb] : y.coeffs) {
      if (is_zero(cb)) continue;
      if (ib == sys_->negative_of(ia)) {
        // [e_a, e_{-a}] = h_a
        RatVec h = sys_->coroot_coords(ia);
        F f = ca * cb;
        for (int q = 0; q < rank; ++q)
          if (!is_zero(h[q])) out.cartan[q] += f * F(h[q]);
        continue;
      }
      int s = sum_index(ia, ib);
      if (s < 0) continue;
      F add = ca * cb * F(n_constant(ia, ib));
      auto [it, fresh] = out.coeffs.emplace(s, add);
      if (!fresh) it->second += add;
    }
  }
  out.prune();
  return out;
}

template <class F>
AlgebraElem<F> StructureConstants::ad_exp(int phi_idx, const F& t,
                                          const AlgebraElem<F>& x) const {
  AlgebraElem<F> acc = x;
  AlgebraElem<F> term = x;  // invariant: term = t^k/k! ad(e_phi)^k (x)
  AlgebraElem<F> ephi = AlgebraElem<F>::root_vector(sys_->rank(), phi_idx);
  long k = 1;
  while (true) {
    term = bracket(ephi, term);
    if (term.is_zero_elem()) break;
    term *= t / F(k);
    acc += term;
    ++k;
  }
  acc.prune();
  return acc;
}

template <class F>
AlgebraElem<F> StructureConstants::torus_scale(const RatVec& h,
                                               const F& lambda,
                                               const AlgebraElem<F>& x) const {
  if (is_zero(lambda))
    throw std::invalid_argument("torus_scale: lambda must be nonzero");
  AlgebraElem<F> out = x;
  for (auto& [idx, c] : out.coeffs) {
    if (is_zero(c)) continue;
    Rat e = sys_->coweight_pairing(idx, h);
    if (!is_integer(e))
      throw std::invalid_argument("torus_scale: non-integral exponent");
    long k = to_long(e);
    F f(1);
    for (long i = 0; i < (k < 0 ? -k : k); ++i) f *= lambda;
    if (k < 0) f = F(1) / f;
    c *= f;
  }
  out.prune();
  return out;
}

}  // namespace liesplit
