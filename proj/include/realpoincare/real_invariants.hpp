#pragma once

// Generators of the semigroup of values of C on real germs: M_sigma_i and m_rho.

#include <optional>
#include <vector>

#include "realpoincare/branch.hpp"
#include "realpoincare/resolution.hpp"
#include "realpoincare/semigroup.hpp"

namespace realpoincare {

struct RealInvariants {
  std::vector<long> M_sigma;  ///< M_sigma_0..M_sigma_g
  std::vector<long> M_tau;    ///< M_tau_1..M_tau_g, equal to N_i M_sigma_i
  std::vector<long> N;        ///< N_1..N_g
  long m_rho = 0;
  int rho = 0;
  int q = 0;
  bool late_split = false;
  SemigroupStructure S_real;
};

struct ConjugateBranchRecipe {
  std::vector<long> b;  ///< b_0..b_g
  BranchParam parametrization;  ///< x = t^{b_0}, y = sum_{i>=1} t^{b_i}
};

/// Everything the real invariants are derived from, computed once per branch.
struct BranchAnalysis {
  BranchParam branch;
  CharExponents ce;
  ResolutionData res;
  std::optional<Splitting> split;  ///< absent for real branches
  MultiplicityTable mt;
  VertexClassification vc;
};

BranchAnalysis analyze_branch(const BranchParam& b);

/// Value of C on a curvette at E_delta: m_delta for conjugation-fixed vertices
/// (delta <= rho), m_delta + e_rho(curvette) m_rho beyond.
long M_of_vertex(const BranchAnalysis& a, int delta);

/// M_sigma_i by the closed form in (N_i, m_rho), cross-checked vertex by vertex
/// against M_of_vertex. Requires a non-real branch (DomainError otherwise).
RealInvariants real_generators(const BranchAnalysis& a, long table_bound = 0);

/// M_delta - m_rho in S for each delta on the geodesic from rho to delta_C, and m_rho in S.
CheckReport geodesic_property_check(const RealInvariants& inv, const BranchAnalysis& a);

/// b_0 = M_0, b_1 = M_1, b_{i+1} = b_i + M_{i+1} - N_i M_i. The resulting branch is run
/// through the full resolution and its semigroup compared with <M>.
ConjugateBranchRecipe conjugate_branch_recipe(const RealInvariants& inv);

}  // namespace realpoincare
