#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liesplit/numeric.hpp"

namespace liesplit {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
std::optional<Family> family_from_letter(char c);

/// A root, kept in two coordinate systems at once: the ambient realization
/// (lambda_i basis for the classical types, e_i basis for E/F/G) and the
/// integer coefficients over the simple basis.
struct Root {
  RatVec ambient;
  std::vector<int> simple_coeffs;
  int height = 0;  // sum of simple coefficients

  bool positive() const { return height > 0; }
};

/// Immutable root system of a simple type, rank-checked at construction.
/// Roots are stored in a fixed canonical order (lexicographic on the simple
/// coefficients), which every downstream report inherits.
class RootSystem {
 public:
  /// Valid types: A_l (l>=1), B_l (l>=2), C_l (l>=3), D_l (l>=4),
  /// E6, E7, E8, F4, G2. Anything else is rejected.
  static std::shared_ptr<const RootSystem> build(Family family, int rank);

  /// D3 (= A3 with relabelled nodes) in the lambda-coordinate convention.
  /// Not a public type; the quadric cross-check needs the 4-dimensional
  /// hyperquadric gradation in the same coordinates as the other D_l.
  static std::shared_ptr<const RootSystem> build_d3_internal();

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_dim_; }

  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int idx) const { return roots_[idx]; }
  int num_roots() const { return static_cast<int>(roots_.size()); }

  /// Simple root alpha_q, q is 1-based as in the tables.
  const Root& simple_root(int q) const { return roots_[simple_idx_[q - 1]]; }
  int simple_index(int q) const { return simple_idx_[q - 1]; }

  int index_of(const std::vector<int>& coeffs) const;  // -1 if not a root
  bool is_root(const std::vector<int>& coeffs) const {
    return index_of(coeffs) >= 0;
  }
  int negative_of(int idx) const { return neg_idx_[idx]; }

  /// Invariant inner product: the ambient dot product, positive definite
  /// and rational in every convention used here.
  Rat inner(const Root& a, const Root& b) const;
  Rat norm2(const Root& a) const { return inner(a, a); }
  bool is_long(int idx) const { return norm2(roots_[idx]) == long_norm2_; }

  /// Cartan integer 2(beta,alpha)/(alpha,alpha).
  long cartan_integer(const Root& beta, const Root& alpha) const;
  long cartan_integer(int beta_idx, int alpha_idx) const {
    return cartan_int_[beta_idx][alpha_idx];
  }

  /// alpha-string through beta: p = max{i>=0 : beta - i*alpha is a root},
  /// q = max{i>=0 : beta + i*alpha is a root}. Undefined for beta = +-alpha.
  std::pair<int, int> root_string(int alpha_idx, int beta_idx) const;

  /// The unique root dominating every other in the simple-coefficient
  /// partial order.
  const Root& highest_root() const { return roots_[highest_idx_]; }
  int highest_root_index() const { return highest_idx_; }

  /// Pairing of beta with a coweight written over the simple coroots:
  /// <beta, sum_q c_q h_q> = sum_q c_q <beta, h_q>.
  Rat coweight_pairing(int beta_idx, const RatVec& coweight) const;

  /// The coroot h_beta over the simple coroots; rational coordinates
  /// m_q (alpha_q,alpha_q)/(beta,beta) for beta = sum m_q alpha_q.
  RatVec coroot_coords(int beta_idx) const;

  std::vector<int> positive_root_indices() const;

  std::string name() const;  // e.g. "B5"

 private:
  RootSystem() = default;
  static std::shared_ptr<const RootSystem> build_from_simples(
      Family family, int rank, int ambient_dim, std::vector<RatVec> simples);

  Family family_;
  int rank_ = 0;
  int ambient_dim_ = 0;
  std::vector<Root> roots_;
  std::vector<int> simple_idx_;
  std::vector<int> neg_idx_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<long>> cartan_int_;
  Rat long_norm2_;
  int highest_idx_ = -1;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

}  // namespace liesplit
