#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "liesplit/numeric.hpp"

namespace liesplit {

// Dense exact linear algebra over an arbitrary field (Rat or GaussRat).
// Row-reduction is the workhorse for every rank/kernel/solve question in
// the library; everything is deterministic: first nonzero pivot, fixed
// column order.

template <class F>
using Mat = std::vector<std::vector<F>>;

template <class F>
Mat<F> identity_mat(std::size_t n) {
  Mat<F> m(n, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = F(1);
  return m;
}

/// In-place reduced row echelon form. Returns the pivot columns in order.
template <class F>
std::vector<std::size_t> rref(Mat<F>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    F inv = F(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      F f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank_of(Mat<F> a) {
  return rref(a).size();
}

/// Basis of the null space {x : A x = 0}, one vector per free column,
/// in increasing free-column order.
template <class F>
Mat<F> kernel_basis(Mat<F> a) {
  if (a.empty()) return {};
  const std::size_t cols = a[0].size();
  std::vector<std::size_t> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  Mat<F> basis;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<F> v(cols, F(0));
    v[fc] = F(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -a[i][fc];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of A x = b (free variables set to zero), or nullopt if
/// inconsistent.
template <class F>
std::optional<std::vector<F>> solve_one(Mat<F> a, const std::vector<F>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_one: shape");
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  std::vector<std::size_t> pivots = rref(a);
  // A pivot in the appended column means the system is inconsistent.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<F> x(cols, F(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
  return x;
}

template <class F>
std::optional<Mat<F>> inverse_of(const Mat<F>& a) {
  const std::size_t n = a.size();
  Mat<F> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("inverse_of: not square");
    aug[i] = a[i];
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? F(1) : F(0));
  }
  if (rref(aug).size() < n) return std::nullopt;
  Mat<F> inv(n, std::vector<F>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

template <class F>
std::vector<F> mat_vec(const Mat<F>& a, const std::vector<F>& x) {
  std::vector<F> y(a.size(), F(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

/// Incremental row-echelon accumulator: feed rows one at a time, track the
/// rank, stop early once it saturates. Used for the big centralizer kernels.
template <class F>
class EchelonAccum {
 public:
  explicit EchelonAccum(std::size_t cols) : cols_(cols) {}

  /// Returns true if the row was independent of everything seen so far.
  bool add_row(std::vector<F> row) {
    if (row.size() != cols_) throw std::invalid_argument("EchelonAccum: width");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      F& lead = row[lead_col_[i]];
      if (!is_zero(lead)) {
        F f = lead;
        for (std::size_t j = lead_col_[i]; j < cols_; ++j)
          row[j] = row[j] - f * rows_[i][j];
      }
    }
    std::size_t c = 0;
    while (c < cols_ && is_zero(row[c])) ++c;
    if (c == cols_) return false;
    F inv = F(1) / row[c];
    for (std::size_t j = c; j < cols_; ++j) row[j] = row[j] * inv;
    rows_.push_back(std::move(row));
    lead_col_.push_back(c);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == cols_; }

 private:
  std::size_t cols_;
  Mat<F> rows_;
  std::vector<std::size_t> lead_col_;
};

// Fraction-free path for rational systems. Denominators are cleared row by
// row, the forward elimination is Bareiss' (exact integer divisions only),
// and the triangular back-substitution returns to Rat. Much faster than
// field RREF on the larger solvability sweeps because no per-entry gcd
// canonicalization happens during elimination.
std::optional<RatVec> solve_rational(const Mat<Rat>& a, const RatVec& b);

}  // namespace liesplit
