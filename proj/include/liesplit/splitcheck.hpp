#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "liesplit/chevalley.hpp"
#include "liesplit/grading.hpp"

namespace liesplit {

/// How the roots of Delta_1 sit against a strongly orthogonal set Psi_2:
/// each root is paired (unique partner), unpaired, or a violation (two or
/// more partners). The three parts partition Delta_1.
struct PairingReport {
  std::vector<int> psi2;
  std::map<int, int> paired;
  std::set<int> unpaired;
  std::set<int> violations;

  bool unique() const { return violations.empty(); }
};

struct TransvectionStep {
  int phi;  // root index of the transvecting vector
  Rat t;
};
struct TorusStep {
  RatVec h;
  Rat lambda;
};
using ElimStep = std::variant<TransvectionStep, TorusStep>;

/// Record of one normal-form reduction: the steps replay on the original
/// input to the reduced result; the surviving support lies inside the
/// strongly orthogonal set of the level.
struct EliminationLog {
  std::vector<ElimStep> steps;
  ElemQ result;
  std::set<int> result_support;  // root indices, subset of the Psi set
  ElemQ residue;                 // components outside the level (zero here:
                                 // level-zero transvections preserve levels)
};

/// Greedy cascade: repeatedly take the highest remaining long root of
/// Delta_k and discard everything not strongly orthogonal to it.
std::vector<int> strongly_orthogonal_set(const Gradation& g, int k);

bool strongly_orthogonal(const RootSystem& sys, int a_idx, int b_idx);

PairingReport unique_pairing_check(const Gradation& g,
                                   const std::vector<int>& psi2);

/// Normal form of a vector supported on an abelian level: generate the
/// leading orthogonal coefficient when absent, then eliminate the paired
/// roots with level-zero transvections, stage by stage.
EliminationLog normal_form_abelian(const Gradation& g,
                                   const StructureConstants& sc,
                                   const ElemQ& xi, int k);

/// Cartan solution <gamma, eta> = 1 on R1 (level 1) and R2 (level 2) for
/// strongly orthogonal residue sets: eta = a*eta0 + b*sum of coroots over
/// R2 with (a,b) = (1,-1/2), or eta0 alone when R2 is empty.
std::optional<ElemQ> lemma_solution(const Gradation& g,
                                    const std::vector<int>& r1,
                                    const std::vector<int>& r2);

/// Direct exact solution of the graded equation: find eta in the
/// nonpositive levels with [eta, zeta] = zeta modulo the nonpositive part,
/// or nullopt when the linear system is inconsistent.
std::optional<ElemQ> solve_splitting_equation(const Gradation& g,
                                              const StructureConstants& sc,
                                              const ElemQ& zeta);

/// True iff some nonzero element of g_0 centralizes the levels
/// -(depth-1)..0; an exact kernel-dimension test.
bool depth_one_centralizer_check(const Gradation& g,
                                 const StructureConstants& sc);

struct CaseKey {
  Family family;
  int rank = 0;
  int marked = 0;

  std::string str() const;
  friend bool operator<(const CaseKey& a, const CaseKey& b) {
    return std::tie(a.family, a.rank, a.marked) <
           std::tie(b.family, b.rank, b.marked);
  }
};

enum class CaseStatus { Verified, OutOfRange, Violation };

struct CaseReport {
  CaseKey key;
  int depth = 0;
  std::map<int, int> dims;       // level >= 0 -> dim g_k
  std::vector<int> psi2;         // root indices (depth-2 cases)
  PairingReport pairing;         // meaningful when pairing_checked
  bool pairing_checked = false;
  int solvable_ok = 0;
  int solvable_trials = 0;
  bool lemma_ok = true;
  bool centralizer = false;
  CaseStatus status = CaseStatus::Verified;
  std::vector<std::string> notes;
};

CaseReport verify_case(const CaseKey& key, int trials, std::uint64_t seed);
CaseReport verify_case(const Gradation& g, const StructureConstants& sc,
                       int trials, std::uint64_t seed);

/// Every valid (family, rank <= max_rank) simple type.
std::vector<std::pair<Family, int>> all_simple_types(int max_rank);

/// Random element with full support on the given levels; coefficients are
/// small nonzero rationals.
ElemQ random_positive_element(const Gradation& g, Rng& rng, int min_level,
                              int max_level);

}  // namespace liesplit
