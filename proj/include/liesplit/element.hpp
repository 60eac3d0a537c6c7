#pragma once

#include <map>
#include <set>

#include "liesplit/numeric.hpp"
#include "liesplit/rootsys.hpp"

namespace liesplit {

/// Element of the Lie algebra: a Cartan part over the simple coroots plus a
/// finitely supported combination of root vectors, keyed by root index.
/// F is Rat throughout the splitting pipeline and GaussRat when the quadric
/// module calls in.
template <class F>
struct AlgebraElem {
  std::vector<F> cartan;  // length = rank, all zero when absent
  std::map<int, F> coeffs;

  AlgebraElem() = default;
  explicit AlgebraElem(int rank) : cartan(rank, F(0)) {}

  static AlgebraElem root_vector(int rank, int root_idx, F c = F(1)) {
    AlgebraElem e(rank);
    e.coeffs.emplace(root_idx, std::move(c));
    return e;
  }
  static AlgebraElem coweight(std::vector<F> coords) {
    AlgebraElem e;
    e.cartan = std::move(coords);
    return e;
  }

  bool is_zero_elem() const {
    for (const F& c : cartan)
      if (!is_zero(c)) return false;
    for (const auto& [idx, c] : coeffs)
      if (!is_zero(c)) return false;
    return true;
  }

  void prune() {
    for (auto it = coeffs.begin(); it != coeffs.end();)
      it = is_zero(it->second) ? coeffs.erase(it) : std::next(it);
  }

  F coeff(int idx) const {
    auto it = coeffs.find(idx);
    return it == coeffs.end() ? F(0) : it->second;
  }

  std::set<int> support() const {
    std::set<int> s;
    for (const auto& [idx, c] : coeffs)
      if (!is_zero(c)) s.insert(idx);
    return s;
  }

  AlgebraElem& operator+=(const AlgebraElem& o) {
    if (cartan.size() < o.cartan.size()) cartan.resize(o.cartan.size(), F(0));
    for (std::size_t q = 0; q < o.cartan.size(); ++q) cartan[q] += o.cartan[q];
    for (const auto& [idx, c] : o.coeffs) {
      auto [it, fresh] = coeffs.emplace(idx, c);
      if (!fresh) it->second += c;
    }
    return *this;
  }
  AlgebraElem& operator-=(const AlgebraElem& o) { return *this += -o; }
  AlgebraElem operator-() const {
    AlgebraElem r = *this;
    for (F& c : r.cartan) c = -c;
    for (auto& [idx, c] : r.coeffs) c = -c;
    return r;
  }
  friend AlgebraElem operator+(AlgebraElem a, const AlgebraElem& b) {
    return a += b;
  }
  friend AlgebraElem operator-(AlgebraElem a, const AlgebraElem& b) {
    return a -= b;
  }
  AlgebraElem& operator*=(const F& s) {
    for (F& c : cartan) c *= s;
    for (auto& [idx, c] : coeffs) c *= s;
    return *this;
  }
  friend AlgebraElem operator*(const F& s, AlgebraElem a) { return a *= s; }

  friend bool operator==(const AlgebraElem& a, const AlgebraElem& b) {
    return (a - b).is_zero_elem();
  }
};

using ElemQ = AlgebraElem<Rat>;
using ElemQi = AlgebraElem<GaussRat>;

}  // namespace liesplit
