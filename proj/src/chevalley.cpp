#include "liesplit/chevalley.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace liesplit {

// Construction of the structure constants, following the classical scheme
// (Carter, Simple Groups of Lie Type, ch. 4): pick one decomposition of
// every positive non-simple root gamma = a + b with a the least positive
// root in the canonical order such that gamma - a is again a positive root
// (the "extraspecial pair"), set N(a,b) = +(p+1), and derive every other
// constant from the two bracket identities
//
//   x+y+z = 0:        N(x,y)/(z,z) = N(y,z)/(x,x) = N(z,x)/(y,y)
//   a+b+c+d = 0:      N(a,b)N(c,d)/(a+b,a+b) + N(b,c)N(a,d)/(b+c,b+c)
//                     + N(c,a)N(b,d)/(c+a,c+a) = 0
//
// working upward by the height of the sum. Magnitudes |N| = p+1 and the
// Jacobi identity are enforced by the test suite, exhaustively for small
// ranks.

namespace {

struct Builder {
  const RootSystem& sys;
  // table over pairs of positive roots (i lex-before j), keyed by (i,j)
  std::map<std::pair<int, int>, int> table;

  explicit Builder(const RootSystem& s) : sys(s) {}

  bool filled(int i, int j) const { return table.count({i, j}) != 0; }

  // N for an arbitrary pair of roots, reduced to the positive-pair table.
  Rat n_general(int i, int j) const {
    int s = sum_idx(i, j);
    if (s < 0) return Rat(0);
    const Root& a = sys.root(i);
    const Root& b = sys.root(j);
    if (a.positive() && b.positive()) {
      auto it = table.find(i < j ? std::make_pair(i, j) : std::make_pair(j, i));
      if (it == table.end())
        throw std::logic_error("structure constant referenced before filled");
      return Rat(i < j ? it->second : -it->second);
    }
    if (!a.positive() && !b.positive())
      return -n_general(sys.negative_of(i), sys.negative_of(j));
    if (!a.positive()) return -n_general(j, i);
    // a positive, b negative, a+b a root
    if (sys.root(s).positive()) {
      // (a, b, -s) sums to zero: N(a,b) = (s,s)/(a,a) * N(b,-s)
      //                                = -(s,s)/(a,a) * N(-b, s)
      return -sys.norm2(sys.root(s)) / sys.norm2(a) *
             n_general(sys.negative_of(j), s);
    }
    // sum negative: flip both signs
    return -n_general(sys.negative_of(i), sys.negative_of(j));
  }

  int sum_idx(int i, int j) const {
    std::vector<int> c = sys.root(i).simple_coeffs;
    const auto& cj = sys.root(j).simple_coeffs;
    for (std::size_t q = 0; q < c.size(); ++q) c[q] += cj[q];
    bool zero = true;
    for (int v : c) zero &= (v == 0);
    if (zero) return -1;
    return sys.index_of(c);
  }

  void run() {
    // positives in canonical (lexicographic) order; a second copy sorted by
    // height drives the recursion, since the identities only reference
    // constants whose sum has strictly smaller height.
    const std::vector<int> lex = sys.positive_root_indices();
    std::vector<int> pos = lex;
    std::sort(pos.begin(), pos.end(), [&](int i, int j) {
      return sys.root(i).height < sys.root(j).height ||
             (sys.root(i).height == sys.root(j).height && i < j);
    });
    for (int g : pos) {
      if (sys.root(g).height == 1) continue;
      // extraspecial pair: lexicographically least a with g-a positive
      int a_id = -1, b_id = -1;
      for (int a : lex) {
        std::vector<int> diff = sys.root(g).simple_coeffs;
        const auto& ca = sys.root(a).simple_coeffs;
        bool nonneg = true;
        for (std::size_t q = 0; q < diff.size(); ++q) {
          diff[q] -= ca[q];
          nonneg &= diff[q] >= 0;
        }
        if (!nonneg) continue;
        int b = sys.index_of(diff);
        if (b >= 0) {
          a_id = a;
          b_id = b;
          break;
        }
      }
      if (a_id < 0) throw std::logic_error("no decomposition of a non-simple root");
      auto [p, q] = sys.root_string(a_id, b_id);
      (void)q;
      table[{a_id, b_id}] = p + 1;

      // remaining special pairs for the same sum, via the four-term identity
      // on (alpha, beta, -a, -b)
      for (int al : lex) {
        if (al == a_id) continue;
        std::vector<int> diff = sys.root(g).simple_coeffs;
        const auto& ca = sys.root(al).simple_coeffs;
        for (std::size_t t = 0; t < diff.size(); ++t) diff[t] -= ca[t];
        int be = sys.index_of(diff);
        if (be < 0 || !sys.root(be).positive()) continue;
        if (sys.root(al).simple_coeffs >= sys.root(be).simple_coeffs) continue;
        if (filled(al, be)) continue;

        Rat acc(0);
        int na = sys.negative_of(a_id);
        int nb = sys.negative_of(b_id);
        if (sum_idx(be, na) >= 0) {
          int bma = sum_idx(be, na);  // beta - a
          acc += n_general(be, na) * n_general(al, nb) /
                 sys.norm2(sys.root(bma));
        }
        if (sum_idx(al, na) >= 0) {
          int ama = sum_idx(al, na);  // alpha - a
          acc += n_general(na, al) * n_general(be, nb) /
                 sys.norm2(sys.root(ama));
        }
        Rat val = sys.norm2(sys.root(g)) * acc / Rat(table[{a_id, b_id}]);
        if (!is_integer(val) || is_zero(val))
          throw std::logic_error("structure constant derivation failed");
        table[{al, be}] = static_cast<int>(to_long(val));
      }
    }
  }
};

}  // namespace

std::shared_ptr<const StructureConstants> StructureConstants::build(
    RootSystemPtr sys) {
  Builder b(*sys);
  b.run();

  auto sc = std::shared_ptr<StructureConstants>(new StructureConstants());
  sc->sys_ = sys;
  const std::size_t n = static_cast<std::size_t>(sys->num_roots());
  sc->num_ = n;
  sc->n_.assign(n * n, 0);
  sc->sum_.assign(n * n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      int s = b.sum_idx(static_cast<int>(i), static_cast<int>(j));
      if (s < 0) continue;
      sc->sum_[i * n + j] = s;
      Rat v = b.n_general(static_cast<int>(i), static_cast<int>(j));
      if (!is_integer(v))
        throw std::logic_error("non-integral structure constant");
      sc->n_[i * n + j] = static_cast<int>(to_long(v));
    }
  }
  return sc;
}

}  // namespace liesplit
