#include "liesplit/linalg.hpp"

#include <gmpxx.h>

namespace liesplit {

std::optional<RatVec> solve_rational(const Mat<Rat>& a, const RatVec& b) {
  const std::size_t rows = a.size();
  if (rows != b.size()) throw std::invalid_argument("solve_rational: shape");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();

  // clear denominators per row; the augmented matrix stays integral
  std::vector<std::vector<mpz_class>> m(rows,
                                        std::vector<mpz_class>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a[i][j].get_den_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), b[i].get_den_mpz_t());
    for (std::size_t j = 0; j <= cols; ++j) {
      const Rat& v = j < cols ? a[i][j] : b[i];
      m[i][j] = v.get_num() * (lcm / v.get_den());
    }
  }

  // Bareiss forward elimination: every division below is exact
  std::vector<std::size_t> pivot_col;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j <= cols; ++j) {
        mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivot_col.push_back(c);
    ++r;
  }
  // consistency: a zero row with nonzero right-hand side kills the system
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;

  // back-substitution over Rat, free variables at zero
  RatVec x(cols, Rat(0));
  for (std::size_t k = r; k-- > 0;) {
    std::size_t c = pivot_col[k];
    Rat s(m[k][cols]);
    for (std::size_t j = c + 1; j < cols; ++j)
      if (m[k][j] != 0 && !is_zero(x[j])) s -= Rat(m[k][j]) * x[j];
    x[c] = s / Rat(m[k][c]);
  }
  return x;
}

}  // namespace liesplit
