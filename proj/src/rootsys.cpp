#include "liesplit/rootsys.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace liesplit {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  return '?';
}

std::optional<Family> family_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    case 'E': case 'e': return Family::E;
    case 'F': case 'f': return Family::F;
    case 'G': case 'g': return Family::G;
    default: return std::nullopt;
  }
}

namespace {

long expected_root_count(Family f, int l) {
  switch (f) {
    case Family::A: return static_cast<long>(l) * (l + 1);
    case Family::B:
    case Family::C: return 2L * l * l;
    case Family::D: return 2L * l * (l - 1);
    case Family::E: return l == 6 ? 72 : (l == 7 ? 126 : 240);
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return -1;
}

RatVec unit(int dim, int i, Rat v = Rat(1)) {
  RatVec e(dim, Rat(0));
  e[i] = std::move(v);
  return e;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::build(Family family, int rank) {
  const bool ok = (family == Family::A && rank >= 1) ||
                  (family == Family::B && rank >= 2) ||
                  (family == Family::C && rank >= 3) ||
                  (family == Family::D && rank >= 4) ||
                  (family == Family::E && rank >= 6 && rank <= 8) ||
                  (family == Family::F && rank == 4) ||
                  (family == Family::G && rank == 2);
  if (!ok) {
    std::ostringstream os;
    os << "invalid simple type " << family_letter(family) << rank
       << " (valid: A_l l>=1, B_l l>=2, C_l l>=3, D_l l>=4, E6, E7, E8, F4, G2)";
    throw std::invalid_argument(os.str());
  }

  std::vector<RatVec> simples;
  int dim = 0;
  switch (family) {
    case Family::A: {
      dim = rank + 1;
      for (int i = 0; i < rank; ++i) {
        RatVec a(dim, Rat(0));
        a[i] = 1;
        a[i + 1] = -1;
        simples.push_back(a);
      }
      break;
    }
    case Family::B: {
      dim = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        RatVec a(dim, Rat(0));
        a[i] = 1;
        a[i + 1] = -1;
        simples.push_back(a);
      }
      simples.push_back(unit(dim, rank - 1));
      break;
    }
    case Family::C: {
      dim = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        RatVec a(dim, Rat(0));
        a[i] = 1;
        a[i + 1] = -1;
        simples.push_back(a);
      }
      simples.push_back(unit(dim, rank - 1, Rat(2)));
      break;
    }
    case Family::D: {
      dim = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        RatVec a(dim, Rat(0));
        a[i] = 1;
        a[i + 1] = -1;
        simples.push_back(a);
      }
      RatVec a(dim, Rat(0));
      a[rank - 2] = 1;
      a[rank - 1] = 1;
      simples.push_back(a);
      break;
    }
    case Family::E: {
      // e_i basis of R^8; E6 and E7 sit inside E8 on the first 6 or 7 nodes.
      dim = 8;
      RatVec a1(8, Rat(1, 2));
      for (int i : {1, 2, 3, 4, 5, 6}) a1[i] = Rat(-1, 2);
      simples.push_back(a1);
      RatVec a2(8, Rat(0));
      a2[0] = 1;
      a2[1] = 1;
      simples.push_back(a2);
      for (int j = 0; j < 6; ++j) {
        RatVec a(8, Rat(0));
        a[j] = -1;
        a[j + 1] = 1;
        simples.push_back(a);
      }
      simples.resize(rank);
      break;
    }
    case Family::F: {
      dim = 4;
      simples = {RatVec{0, 1, -1, 0}, RatVec{0, 0, 1, -1}, RatVec{0, 0, 0, 1},
                 RatVec{Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)}};
      break;
    }
    case Family::G: {
      dim = 3;
      simples = {RatVec{1, -1, 0}, RatVec{-2, 1, 1}};
      break;
    }
  }
  return build_from_simples(family, rank, dim, std::move(simples));
}

std::shared_ptr<const RootSystem> RootSystem::build_d3_internal() {
  std::vector<RatVec> simples = {RatVec{1, -1, 0}, RatVec{0, 1, -1},
                                 RatVec{0, 1, 1}};
  return build_from_simples(Family::D, 3, 3, std::move(simples));
}

std::shared_ptr<const RootSystem> RootSystem::build_from_simples(
    Family family, int rank, int ambient_dim, std::vector<RatVec> simples) {
  auto sys = std::shared_ptr<RootSystem>(new RootSystem());
  sys->family_ = family;
  sys->rank_ = rank;
  sys->ambient_dim_ = ambient_dim;

  // Close the positive system upward by root strings: beta + alpha_q is a
  // root iff the string count q = p - <beta, alpha_q^v> is positive.
  auto cart = [&](const RatVec& beta, int q) {
    Rat c = 2 * dot(beta, simples[q]) / dot(simples[q], simples[q]);
    if (!is_integer(c)) throw std::logic_error("non-integral Cartan pairing");
    return to_long(c);
  };

  std::map<std::vector<int>, RatVec> pos;
  std::vector<std::vector<int>> frontier;
  for (int q = 0; q < rank; ++q) {
    std::vector<int> c(rank, 0);
    c[q] = 1;
    pos.emplace(c, simples[q]);
    frontier.push_back(c);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& c : frontier) {
      const RatVec beta = pos.at(c);
      for (int q = 0; q < rank; ++q) {
        // beta - k*alpha_q only decrements the q-th coefficient; every root
        // on the downward walk from a positive root is positive, so the
        // positive set decides membership.
        int down = 0;
        std::vector<int> walk = c;
        while (true) {
          walk[q] -= 1;
          if (pos.count(walk) == 0) break;
          ++down;
        }
        long up = down - cart(beta, q);
        if (up >= 1) {
          std::vector<int> c2 = c;
          c2[q] += 1;
          if (pos.count(c2) == 0) {
            RatVec b2 = beta;
            for (int i = 0; i < ambient_dim; ++i) b2[i] += simples[q][i];
            pos.emplace(c2, b2);
            next.push_back(c2);
          }
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<Root> all;
  for (const auto& [c, amb] : pos) {
    Root r;
    r.simple_coeffs = c;
    r.ambient = amb;
    for (int v : c) r.height += v;
    all.push_back(r);
    Root neg;
    neg.simple_coeffs.reserve(rank);
    for (int v : c) neg.simple_coeffs.push_back(-v);
    neg.ambient.reserve(ambient_dim);
    for (const Rat& v : amb) neg.ambient.push_back(-v);
    neg.height = -r.height;
    all.push_back(neg);
  }
  std::sort(all.begin(), all.end(), [](const Root& a, const Root& b) {
    return a.simple_coeffs < b.simple_coeffs;
  });
  sys->roots_ = std::move(all);

  if (static_cast<long>(sys->roots_.size()) !=
      expected_root_count(family, rank))
    throw std::logic_error("root count mismatch for " + sys->name());

  for (int i = 0; i < sys->num_roots(); ++i)
    sys->index_[sys->roots_[i].simple_coeffs] = i;
  sys->neg_idx_.resize(sys->roots_.size());
  for (int i = 0; i < sys->num_roots(); ++i) {
    std::vector<int> nc;
    for (int v : sys->roots_[i].simple_coeffs) nc.push_back(-v);
    sys->neg_idx_[i] = sys->index_.at(nc);
  }
  sys->simple_idx_.resize(rank);
  for (int q = 0; q < rank; ++q) {
    std::vector<int> c(rank, 0);
    c[q] = 1;
    sys->simple_idx_[q] = sys->index_.at(c);
  }

  sys->long_norm2_ = Rat(0);
  for (const Root& r : sys->roots_) {
    Rat n2 = sys->inner(r, r);
    if (n2 > sys->long_norm2_) sys->long_norm2_ = n2;
  }

  const int n = sys->num_roots();
  sys->cartan_int_.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sys->cartan_int_[i][j] =
          sys->cartan_integer(sys->roots_[i], sys->roots_[j]);

  int best = -1;
  for (int i = 0; i < n; ++i) {
    if (best < 0 || sys->roots_[i].height > sys->roots_[best].height) best = i;
  }
  // the dominant root must majorize every root coefficientwise
  for (const Root& r : sys->roots_)
    for (int q = 0; q < rank; ++q)
      if (r.simple_coeffs[q] > sys->roots_[best].simple_coeffs[q])
        throw std::logic_error("highest root is not dominant");
  sys->highest_idx_ = best;

  return sys;
}

int RootSystem::index_of(const std::vector<int>& coeffs) const {
  auto it = index_.find(coeffs);
  return it == index_.end() ? -1 : it->second;
}

Rat RootSystem::inner(const Root& a, const Root& b) const {
  return dot(a.ambient, b.ambient);
}

long RootSystem::cartan_integer(const Root& beta, const Root& alpha) const {
  Rat c = 2 * inner(beta, alpha) / inner(alpha, alpha);
  if (!is_integer(c))
    throw std::logic_error("Cartan pairing not integral");
  return to_long(c);
}

std::pair<int, int> RootSystem::root_string(int alpha_idx,
                                            int beta_idx) const {
  if (beta_idx == alpha_idx || beta_idx == neg_idx_[alpha_idx])
    throw std::invalid_argument("root_string undefined for beta = +-alpha");
  const auto& a = roots_[alpha_idx].simple_coeffs;
  const auto& b = roots_[beta_idx].simple_coeffs;
  auto walk = [&](int dir) {
    int steps = 0;
    std::vector<int> c = b;
    while (true) {
      for (std::size_t q = 0; q < c.size(); ++q) c[q] += dir * a[q];
      if (!is_root(c)) break;
      ++steps;
    }
    return steps;
  };
  return {walk(-1), walk(+1)};
}

Rat RootSystem::coweight_pairing(int beta_idx, const RatVec& coweight) const {
  Rat s(0);
  for (int q = 1; q <= rank_; ++q)
    s += coweight[q - 1] * cartan_int_[beta_idx][simple_idx_[q - 1]];
  return s;
}

RatVec RootSystem::coroot_coords(int beta_idx) const {
  const Root& beta = roots_[beta_idx];
  Rat bn = norm2(beta);
  RatVec c(rank_);
  for (int q = 0; q < rank_; ++q) {
    const Root& aq = roots_[simple_idx_[q]];
    c[q] = Rat(beta.simple_coeffs[q]) * norm2(aq) / bn;
  }
  return c;
}

std::vector<int> RootSystem::positive_root_indices() const {
  std::vector<int> out;
  for (int i = 0; i < num_roots(); ++i)
    if (roots_[i].positive()) out.push_back(i);
  return out;
}

std::string RootSystem::name() const {
  return std::string(1, family_letter(family_)) + std::to_string(rank_);
}

}  // namespace liesplit
