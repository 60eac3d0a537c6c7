#include "liesplit/grading.hpp"

#include <sstream>
#include <stdexcept>

#include "liesplit/linalg.hpp"

namespace liesplit {

Gradation Gradation::make(RootSystemPtr sys, int marked) {
  if (marked < 1 || marked > sys->rank()) {
    std::ostringstream os;
    os << "marked root index " << marked << " out of range 1.." << sys->rank();
    throw std::invalid_argument(os.str());
  }
  Gradation g;
  g.sys_ = sys;
  g.marked_ = marked;
  for (int i = 0; i < sys->num_roots(); ++i) {
    int k = sys->root(i).simple_coeffs[marked - 1];
    g.levels_[k].push_back(i);
    if (k > g.depth_) g.depth_ = k;
  }

  // eta0 = fundamental coweight of the marked node over the simple coroots:
  // solve <alpha_p, sum_q c_q h_q> = delta_{p,marked}
  const int n = sys->rank();
  Mat<Rat> a(n, std::vector<Rat>(n));
  RatVec b(n, Rat(0));
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q)
      a[p][q] =
          Rat(sys->cartan_integer(sys->simple_index(p + 1), sys->simple_index(q + 1)));
    b[p] = Rat(p + 1 == marked ? 1 : 0);
  }
  auto sol = solve_one(a, b);
  if (!sol) throw std::logic_error("Cartan matrix is singular");
  g.eta0_ = *sol;

  for (int i = 0; i < sys->num_roots(); ++i) {
    if (sys->coweight_pairing(i, g.eta0_) != Rat(g.level_of(i)))
      throw std::logic_error("grading coweight does not reproduce the levels");
  }
  return g;
}

Gradation grade(RootSystemPtr sys, int marked) {
  return Gradation::make(std::move(sys), marked);
}

const std::vector<int>& Gradation::level(int k) const {
  static const std::vector<int> empty;
  auto it = levels_.find(k);
  return it == levels_.end() ? empty : it->second;
}

int Gradation::level_dim(int k) const {
  int d = static_cast<int>(level(k).size());
  if (k == 0) d += sys_->rank();
  return d;
}

std::string Gradation::case_name() const {
  std::ostringstream os;
  os << "(" << sys_->name() << ",a" << marked_ << ")";
  return os.str();
}

std::set<int> abelian_levels(const Gradation& g) {
  std::set<int> out;
  for (int k = 1; k <= g.depth(); ++k) {
    const auto& lv = g.level(k);
    bool abelian = true;
    for (std::size_t i = 0; i < lv.size() && abelian; ++i) {
      for (std::size_t j = i; j < lv.size() && abelian; ++j) {
        std::vector<int> sum = g.sys().root(lv[i]).simple_coeffs;
        const auto& cj = g.sys().root(lv[j]).simple_coeffs;
        for (std::size_t q = 0; q < sum.size(); ++q) sum[q] += cj[q];
        if (g.sys().is_root(sum)) abelian = false;
      }
    }
    if (abelian) out.insert(k);
  }
  // sanity: levels above depth/2 are abelian for weight reasons
  for (int k = g.depth() / 2 + 1; k <= g.depth(); ++k)
    if (out.count(k) == 0)
      throw std::logic_error("level above depth/2 is not abelian");
  return out;
}

}  // namespace liesplit
