#include "liesplit/splitcheck.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "liesplit/linalg.hpp"
#include "liesplit/rng.hpp"

namespace liesplit {

bool strongly_orthogonal(const RootSystem& sys, int a_idx, int b_idx) {
  const auto& a = sys.root(a_idx).simple_coeffs;
  const auto& b = sys.root(b_idx).simple_coeffs;
  std::vector<int> sum(a.size()), diff(a.size());
  bool sum_zero = true, diff_zero = true;
  for (std::size_t q = 0; q < a.size(); ++q) {
    sum[q] = a[q] + b[q];
    diff[q] = a[q] - b[q];
    sum_zero &= (sum[q] == 0);
    diff_zero &= (diff[q] == 0);
  }
  if (sum_zero || diff_zero) return false;  // b = +-a
  return !sys.is_root(sum) && !sys.is_root(diff);
}

std::vector<int> strongly_orthogonal_set(const Gradation& g, int k) {
  if (k <= 0) throw std::invalid_argument("level must be positive");
  const RootSystem& sys = g.sys();
  std::vector<int> remaining = g.level(k);
  std::vector<int> out;
  while (true) {
    int best = -1;
    for (int idx : remaining) {
      if (!sys.is_long(idx)) continue;
      if (best < 0 || sys.root(idx).height > sys.root(best).height ||
          (sys.root(idx).height == sys.root(best).height &&
           sys.root(idx).simple_coeffs > sys.root(best).simple_coeffs))
        best = idx;
    }
    if (best < 0) break;
    out.push_back(best);
    std::vector<int> keep;
    for (int idx : remaining)
      if (idx != best && strongly_orthogonal(sys, idx, best)) keep.push_back(idx);
    remaining = std::move(keep);
  }
  return out;
}

PairingReport unique_pairing_check(const Gradation& g,
                                   const std::vector<int>& psi2) {
  const RootSystem& sys = g.sys();
  for (int idx : psi2)
    if (g.level_of(idx) != 2)
      throw std::invalid_argument("psi2 must consist of level-2 roots");
  std::set<int> psi_set(psi2.begin(), psi2.end());

  PairingReport rep;
  rep.psi2 = psi2;
  for (int alpha : g.level(1)) {
    std::vector<int> partners;
    for (int beta : g.level(1)) {
      if (beta == alpha) continue;
      std::vector<int> sum = sys.root(alpha).simple_coeffs;
      const auto& cb = sys.root(beta).simple_coeffs;
      for (std::size_t q = 0; q < sum.size(); ++q) sum[q] += cb[q];
      int s = sys.index_of(sum);
      if (s >= 0 && psi_set.count(s)) partners.push_back(beta);
    }
    if (partners.empty())
      rep.unpaired.insert(alpha);
    else if (partners.size() == 1)
      rep.paired[alpha] = partners[0];
    else
      rep.violations.insert(alpha);
  }
  return rep;
}

EliminationLog normal_form_abelian(const Gradation& g,
                                   const StructureConstants& sc,
                                   const ElemQ& xi, int k) {
  const RootSystem& sys = g.sys();
  std::set<int> ab = abelian_levels(g);
  if (ab.count(k) == 0) {
    std::ostringstream os;
    os << "level " << k << " of " << g.case_name() << " is not abelian";
    throw std::invalid_argument(os.str());
  }
  for (const auto& [idx, c] : xi.coeffs)
    if (!is_zero(c) && g.level_of(idx) != k)
      throw std::invalid_argument("input not supported on the given level");

  std::vector<int> psi = strongly_orthogonal_set(g, k);
  std::set<int> psi_set(psi.begin(), psi.end());

  EliminationLog log;
  ElemQ cur = xi;
  cur.prune();

  std::set<int> remaining(g.level(k).begin(), g.level(k).end());
  std::set<int> cleared;  // processed Pi sets; their coefficients must stay 0

  auto apply = [&](int phi, const Rat& t) {
    cur = sc.ad_exp(phi, t, cur);
    log.steps.push_back(TransvectionStep{phi, t});
    for (int r : cleared)
      if (!is_zero(cur.coeff(r)))
        throw std::logic_error("elimination revived a cleared coefficient");
  };

  for (int beta : psi) {
    remaining.erase(beta);
    std::vector<int> pi;
    for (int gamma : remaining) {
      std::vector<int> diff = sys.root(beta).simple_coeffs;
      const auto& cg = sys.root(gamma).simple_coeffs;
      for (std::size_t q = 0; q < diff.size(); ++q) diff[q] -= cg[q];
      if (sys.index_of(diff) >= 0) pi.push_back(gamma);
    }
    for (int gamma : pi) remaining.erase(gamma);

    bool pi_hit = false;
    for (int gamma : pi) pi_hit |= !is_zero(cur.coeff(gamma));

    if (is_zero(cur.coeff(beta)) && pi_hit) {
      // generate the leading coefficient first
      int gamma = -1;
      for (int c : pi)
        if (!is_zero(cur.coeff(c))) {
          gamma = c;
          break;
        }
      std::vector<int> d = sys.root(beta).simple_coeffs;
      const auto& cg = sys.root(gamma).simple_coeffs;
      for (std::size_t q = 0; q < d.size(); ++q) d[q] -= cg[q];
      int phi = sys.index_of(d);
      bool generated = false;
      for (long t = 1; t <= 4 && !generated; ++t) {
        ElemQ trial = sc.ad_exp(phi, Rat(t), cur);
        if (!is_zero(trial.coeff(beta))) {
          apply(phi, Rat(t));
          generated = true;
        }
      }
      if (!generated)
        throw std::logic_error("failed to generate the leading coefficient");
    }

    if (!is_zero(cur.coeff(beta))) {
      for (int gamma : pi) {
        Rat cg = cur.coeff(gamma);
        if (is_zero(cg)) continue;
        // phi = gamma - beta has level zero; the transvection changes the
        // gamma coefficient linearly in t and nothing else on this stage
        std::vector<int> d = sys.root(gamma).simple_coeffs;
        const auto& cb = sys.root(beta).simple_coeffs;
        for (std::size_t q = 0; q < d.size(); ++q) d[q] -= cb[q];
        int phi = sys.index_of(d);
        if (phi < 0 || g.level_of(phi) != 0)
          throw std::logic_error("transvection root is not level zero");
        Rat denom = Rat(sc.n_constant(phi, beta)) * cur.coeff(beta);
        apply(phi, -cg / denom);
        if (!is_zero(cur.coeff(gamma)))
          throw std::logic_error("transvection failed to clear coefficient");
      }
    }
    for (int gamma : pi) cleared.insert(gamma);
  }

  for (const auto& [idx, c] : cur.coeffs) {
    if (is_zero(c)) continue;
    if (g.level_of(idx) != k)
      throw std::logic_error("elimination left the level");
    if (psi_set.count(idx) == 0)
      throw std::invalid_argument(
          "level admits no covering strongly orthogonal set of long roots");
  }

  log.result = cur;
  log.result_support = cur.support();
  log.residue = ElemQ(sys.rank());
  return log;
}

std::optional<ElemQ> lemma_solution(const Gradation& g,
                                    const std::vector<int>& r1,
                                    const std::vector<int>& r2) {
  const RootSystem& sys = g.sys();
  for (int a : r1)
    if (g.level_of(a) != 1)
      throw std::invalid_argument("R1 must lie in level 1");
  for (int b : r2)
    if (g.level_of(b) != 2)
      throw std::invalid_argument("R2 must lie in level 2");
  for (int a : r1)
    for (int b : r2)
      if (!strongly_orthogonal(sys, a, b))
        throw std::invalid_argument("R1 and R2 are not strongly orthogonal");
  for (std::size_t i = 0; i < r2.size(); ++i)
    for (std::size_t j = i + 1; j < r2.size(); ++j)
      if (!strongly_orthogonal(sys, r2[i], r2[j]))
        throw std::invalid_argument("R2 is not mutually strongly orthogonal");

  RatVec coords = g.eta0();  // a = 1
  if (!r2.empty()) {
    const Rat b(-1, 2);
    for (int beta : r2) {
      RatVec h = sys.coroot_coords(beta);
      for (int q = 0; q < sys.rank(); ++q) coords[q] += b * h[q];
    }
  }
  for (int gamma : r1)
    if (sys.coweight_pairing(gamma, coords) != 1) return std::nullopt;
  for (int beta : r2)
    if (sys.coweight_pairing(beta, coords) != 1) return std::nullopt;
  return ElemQ::coweight(coords);
}

std::optional<ElemQ> solve_splitting_equation(const Gradation& g,
                                              const StructureConstants& sc,
                                              const ElemQ& zeta) {
  const RootSystem& sys = g.sys();
  const int rank = sys.rank();
  if (zeta.is_zero_elem())
    throw std::invalid_argument("zeta must be nonzero");
  for (const auto& [idx, c] : zeta.coeffs)
    if (!is_zero(c) && g.level_of(idx) < 1)
      throw std::invalid_argument("zeta must be supported on positive levels");
  for (const Rat& c : zeta.cartan)
    if (!is_zero(c))
      throw std::invalid_argument("zeta must be supported on positive levels");

  // rows: positive-level root coordinates; columns: Cartan coroots, then
  // root vectors of levels 0 down to 1-depth (level -depth cannot reach a
  // positive level against zeta and is dropped from the unknowns).
  std::vector<int> row_roots;
  for (int kk = 1; kk <= g.depth(); ++kk)
    for (int idx : g.level(kk)) row_roots.push_back(idx);
  std::map<int, int> row_of;
  for (std::size_t i = 0; i < row_roots.size(); ++i) row_of[row_roots[i]] = i;

  std::vector<int> col_roots;
  for (int kk = 0; kk >= 1 - g.depth(); --kk)
    for (int idx : g.level(kk)) col_roots.push_back(idx);

  const std::size_t rows = row_roots.size();
  const std::size_t cols = rank + col_roots.size();
  Mat<Rat> a(rows, RatVec(cols, Rat(0)));
  RatVec b(rows, Rat(0));
  for (std::size_t i = 0; i < rows; ++i) b[i] = zeta.coeff(row_roots[i]);

  for (int q = 0; q < rank; ++q) {
    for (const auto& [idx, c] : zeta.coeffs) {
      long ci = sys.cartan_integer(idx, sys.simple_index(q + 1));
      if (ci != 0) a[row_of.at(idx)][q] += Rat(ci) * c;
    }
  }
  for (std::size_t j = 0; j < col_roots.size(); ++j) {
    int delta = col_roots[j];
    for (const auto& [idx, c] : zeta.coeffs) {
      int s = sc.sum_index(delta, idx);
      if (s < 0 || g.level_of(s) < 1) continue;
      a[row_of.at(s)][rank + j] += Rat(sc.n_constant(delta, idx)) * c;
    }
  }

  auto sol = solve_rational(a, b);
  if (!sol) return std::nullopt;

  ElemQ eta(rank);
  for (int q = 0; q < rank; ++q) eta.cartan[q] = (*sol)[q];
  for (std::size_t j = 0; j < col_roots.size(); ++j)
    if (!is_zero((*sol)[rank + j]))
      eta.coeffs.emplace(col_roots[j], (*sol)[rank + j]);

  // exactness guard: the positive part of [eta,zeta]-zeta must vanish
  ElemQ check = sc.bracket(eta, zeta) - zeta;
  for (const auto& [idx, c] : check.coeffs)
    if (!is_zero(c) && g.level_of(idx) >= 1)
      throw std::logic_error("solver returned a non-solution");
  return eta;
}

bool depth_one_centralizer_check(const Gradation& g,
                                 const StructureConstants& sc) {
  const RootSystem& sys = g.sys();
  const int rank = sys.rank();

  std::vector<ElemQ> zbasis;
  for (int q = 0; q < rank; ++q) {
    ElemQ h(rank);
    h.cartan[q] = 1;
    zbasis.push_back(h);
  }
  for (int idx : g.level(0)) zbasis.push_back(ElemQ::root_vector(rank, idx));
  const std::size_t cols = zbasis.size();

  std::vector<ElemQ> targets;
  for (int k = -(g.depth() - 1); k <= 0; ++k)
    for (int idx : g.level(k)) targets.push_back(ElemQ::root_vector(rank, idx));
  for (int q = 0; q < rank; ++q) {
    ElemQ h(rank);
    h.cartan[q] = 1;
    targets.push_back(h);
  }

  EchelonAccum<Rat> ech(cols);
  for (const ElemQ& x : targets) {
    std::vector<ElemQ> bx;
    bx.reserve(cols);
    for (const ElemQ& z : zbasis) bx.push_back(sc.bracket(z, x));
    // constraint rows, one per coordinate of g that appears
    std::set<int> coords;
    bool any_cartan = false;
    for (const ElemQ& v : bx) {
      for (const auto& [idx, c] : v.coeffs)
        if (!is_zero(c)) coords.insert(idx);
      for (const Rat& c : v.cartan) any_cartan |= !is_zero(c);
    }
    for (int coord : coords) {
      RatVec row(cols, Rat(0));
      for (std::size_t j = 0; j < cols; ++j) row[j] = bx[j].coeff(coord);
      ech.add_row(std::move(row));
      if (ech.full()) return false;
    }
    if (any_cartan) {
      for (int q = 0; q < rank; ++q) {
        RatVec row(cols, Rat(0));
        bool nz = false;
        for (std::size_t j = 0; j < cols; ++j) {
          row[j] = q < static_cast<int>(bx[j].cartan.size()) ? bx[j].cartan[q]
                                                             : Rat(0);
          nz |= !is_zero(row[j]);
        }
        if (nz) {
          ech.add_row(std::move(row));
          if (ech.full()) return false;
        }
      }
    }
  }
  return ech.rank() < cols;
}

std::string CaseKey::str() const {
  std::ostringstream os;
  os << family_letter(family) << rank << "a" << marked;
  return os.str();
}

std::vector<std::pair<Family, int>> all_simple_types(int max_rank) {
  std::vector<std::pair<Family, int>> out;
  for (int l = 1; l <= max_rank; ++l) out.emplace_back(Family::A, l);
  for (int l = 2; l <= max_rank; ++l) out.emplace_back(Family::B, l);
  for (int l = 3; l <= max_rank; ++l) out.emplace_back(Family::C, l);
  for (int l = 4; l <= max_rank; ++l) out.emplace_back(Family::D, l);
  for (int l = 6; l <= std::min(8, max_rank); ++l)
    out.emplace_back(Family::E, l);
  if (max_rank >= 4) out.emplace_back(Family::F, 4);
  if (max_rank >= 2) out.emplace_back(Family::G, 2);
  return out;
}

ElemQ random_positive_element(const Gradation& g, Rng& rng, int min_level,
                              int max_level) {
  ElemQ z(g.sys().rank());
  for (int k = min_level; k <= std::min(max_level, g.depth()); ++k)
    for (int idx : g.level(k)) z.coeffs.emplace(idx, rng.rational());
  return z;
}

CaseReport verify_case(const CaseKey& key, int trials, std::uint64_t seed) {
  auto sys = RootSystem::build(key.family, key.rank);
  Gradation g = grade(sys, key.marked);
  auto sc = StructureConstants::build(sys);
  return verify_case(g, *sc, trials, seed);
}

CaseReport verify_case(const Gradation& g, const StructureConstants& sc,
                       int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const RootSystem& sys = g.sys();
  CaseReport rep;
  rep.key = CaseKey{sys.family(), sys.rank(), g.marked()};
  rep.depth = g.depth();
  for (int k = 0; k <= g.depth(); ++k) rep.dims[k] = g.level_dim(k);
  rep.centralizer = depth_one_centralizer_check(g, sc);
  if (rep.centralizer != (g.depth() == 1)) {
    rep.status = CaseStatus::Violation;
    rep.notes.push_back("centralizer criterion disagrees with the depth");
  }

  if (g.depth() >= 3) {
    rep.status = CaseStatus::OutOfRange;
    rep.notes.push_back("depth " + std::to_string(g.depth()) +
                        " is outside the checked range");
    return rep;
  }

  if (g.depth() == 2) {
    rep.psi2 = strongly_orthogonal_set(g, 2);
    rep.pairing = unique_pairing_check(g, rep.psi2);
    rep.pairing_checked = true;
    if (!rep.pairing.unique()) {
      rep.status = CaseStatus::Violation;
      rep.notes.push_back("unique pairing fails for " +
                          std::to_string(rep.pairing.violations.size()) +
                          " roots");
    }
  }

  const std::string tag = rep.key.str();
  rep.solvable_trials = trials;
  for (int t = 0; t < trials; ++t) {
    Rng rng(mix_seed(seed, tag, static_cast<std::uint64_t>(t)));
    ElemQ zeta = random_positive_element(g, rng, 1, g.depth());
    auto eta = solve_splitting_equation(g, sc, zeta);
    if (eta)
      ++rep.solvable_ok;
    else {
      rep.status = CaseStatus::Violation;
      rep.notes.push_back("unsolvable random instance at trial " +
                          std::to_string(t));
    }
  }

  // residue-set solution of the lemma, on elimination-reduced supports
  const int kstar = g.depth();
  std::set<int> ab = abelian_levels(g);
  if (ab.count(kstar)) {
    int checks = std::min(trials, 8);
    for (int t = 0; t < checks && rep.lemma_ok; ++t) {
      Rng rng(mix_seed(seed, tag + "#lemma", static_cast<std::uint64_t>(t)));
      ElemQ xi = random_positive_element(g, rng, kstar, kstar);
      EliminationLog log = normal_form_abelian(g, sc, xi, kstar);
      std::vector<int> r2, r1;
      if (kstar == 2) {
        r2.assign(log.result_support.begin(), log.result_support.end());
        for (int gamma : g.level(1)) {
          bool ok = true;
          for (int beta : r2) ok &= strongly_orthogonal(sys, gamma, beta);
          if (ok) r1.push_back(gamma);
        }
      } else {
        r1.assign(log.result_support.begin(), log.result_support.end());
      }
      auto eta = lemma_solution(g, r1, r2);
      if (!eta) {
        rep.lemma_ok = false;
        break;
      }
      ElemQ zp(sys.rank());
      for (int idx : r1) zp.coeffs.emplace(idx, rng.rational());
      for (int idx : r2) zp.coeffs.emplace(idx, rng.rational());
      if (zp.is_zero_elem()) continue;
      ElemQ check = sc.bracket(*eta, zp) - zp;
      for (const auto& [idx, c] : check.coeffs)
        if (!is_zero(c) && g.level_of(idx) >= 1) rep.lemma_ok = false;
    }
    if (!rep.lemma_ok) {
      rep.status = CaseStatus::Violation;
      rep.notes.push_back("residue-set solution failed to verify");
    }
  }
  return rep;
}

}  // namespace liesplit
