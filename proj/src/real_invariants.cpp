#include "realpoincare/real_invariants.hpp"

#include <sstream>

#include "realpoincare/errors.hpp"

namespace realpoincare {

namespace {

std::string join(const std::vector<long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return "(" + os.str() + ")";
}

}  // namespace

BranchAnalysis analyze_branch(const BranchParam& b) {
  require_valid(b);
  BranchAnalysis a;
  a.branch = b;
  a.ce = char_exponents(b);
  a.res = resolve(b);
  if (!is_real_branch(b).is_real) a.split = splitting_search(b, a.res);
  const Splitting* sp = a.split ? &*a.split : nullptr;
  a.mt = multiplicity_table(a.res, sp);
  a.vc = classify_vertices(a.res, sp);

  if (a.vc.g() != a.ce.g)
    throw InvariantViolation("resolution graph has " + std::to_string(a.vc.g()) +
                             " rupture vertices, characteristic exponents give g = " + std::to_string(a.ce.g));
  if (a.ce.g > 0) {
    std::vector<long> m;
    for (int s : a.vc.sigma) m.push_back(a.mt.m_of(s));
    if (m != a.ce.classical_generators())
      throw InvariantViolation("dead-end values " + join(m) + " differ from the classical generators " +
                               join(a.ce.classical_generators()));
  }
  return a;
}

long M_of_vertex(const BranchAnalysis& a, int delta) {
  if (!a.split) throw DomainError("M-values need a splitting point; the branch is real");
  const int rho = a.split->rho;
  if (delta > a.res.delta_C) {
    // Late-split extension: fixed by conjugation, value of C on the curvette.
    auto pts = extended_points(a.res, &*a.split);
    auto cur = curvette_multiplicities(a.res, delta, &*a.split);
    long v = 0;
    for (std::size_t k = 0; k < cur.size(); ++k) v += cur[k] * pts[k].multiplicity;
    return v;
  }
  const long m = a.mt.m_of(delta);
  if (delta <= rho) return m;
  auto cur = curvette_multiplicities(a.res, delta);
  return m + cur[static_cast<std::size_t>(rho - 1)] * a.mt.m_rho;
}

RealInvariants real_generators(const BranchAnalysis& a, long table_bound) {
  if (!a.split) throw DomainError("real generators M_sigma are undefined for a real branch (C = conj(C))");
  RealInvariants inv;
  inv.m_rho = a.mt.m_rho;
  inv.rho = a.split->rho;
  inv.q = a.split->q;
  inv.late_split = a.split->late_split;
  inv.N = a.ce.N();

  if (a.ce.g == 0) {
    inv.M_sigma = {1};
  } else {
    const int g = a.ce.g;
    const int q = inv.q;
    for (int i = 0; i <= g; ++i) {
      const long m = a.mt.m_of(a.vc.sigma[static_cast<std::size_t>(i)]);
      long M = m;
      if (i == q + 1) {
        M = m + inv.m_rho;
      } else if (i > q + 1) {
        long f = 1;
        for (int j = q + 1; j <= i - 1; ++j) f *= inv.N[static_cast<std::size_t>(j - 1)];
        M = m + f * inv.m_rho;
      }
      const long other = M_of_vertex(a, a.vc.sigma[static_cast<std::size_t>(i)]);
      if (other != M)
        throw InvariantViolation("M_sigma_" + std::to_string(i) + ": closed form gives " + std::to_string(M) +
                                 ", curvette pairing gives " + std::to_string(other));
      inv.M_sigma.push_back(M);
    }
    for (int i = 1; i <= g; ++i) {
      const long Mt = inv.N[static_cast<std::size_t>(i - 1)] * inv.M_sigma[static_cast<std::size_t>(i)];
      const long other = M_of_vertex(a, a.vc.tau[static_cast<std::size_t>(i - 1)]);
      if (other != Mt)
        throw InvariantViolation("M_tau_" + std::to_string(i) + " = " + std::to_string(other) + " but N_i M_sigma_i = " +
                                 std::to_string(Mt));
      inv.M_tau.push_back(Mt);
    }
  }
  inv.S_real = build_structure(inv.M_sigma, table_bound);
  return inv;
}

CheckReport geodesic_property_check(const RealInvariants& inv, const BranchAnalysis& a) {
  CheckReport rep;
  if (!a.split) {
    rep.fail("branch is real: no splitting point");
    return rep;
  }
  if (!inv.S_real.contains(inv.m_rho)) rep.fail("m_rho = " + std::to_string(inv.m_rho) + " is not in S");
  std::vector<int> path;
  if (inv.late_split) path = {inv.rho};
  else path = a.res.graph.geodesic(inv.rho, a.res.delta_C);
  for (int d : path) {
    const long M = M_of_vertex(a, d);
    if (!inv.S_real.contains(M - inv.m_rho))
      rep.fail("vertex " + std::to_string(d) + ": M = " + std::to_string(M) + ", M - m_rho = " +
               std::to_string(M - inv.m_rho) + " is not in S");
  }
  return rep;
}

ConjugateBranchRecipe conjugate_branch_recipe(const RealInvariants& inv) {
  ConjugateBranchRecipe r;
  const auto& M = inv.M_sigma;
  r.b.push_back(M[0]);
  if (M.size() > 1) r.b.push_back(M[1]);
  for (std::size_t i = 1; i + 1 < M.size(); ++i) r.b.push_back(r.b[i] + M[i + 1] - inv.N[i - 1] * M[i]);
  for (std::size_t i = 0; i < r.b.size(); ++i)
    if (r.b[i] <= 0 || (i >= 2 && r.b[i] <= r.b[i - 1]))
      throw InvariantViolation("recipe exponents " + join(r.b) + " are not positive and increasing");

  r.parametrization.n = static_cast<int>(r.b[0]);
  for (std::size_t i = 1; i < r.b.size(); ++i) r.parametrization.y_terms[static_cast<int>(r.b[i])] = GaussianRational(1);

  // The recipe curve is real; its semigroup must be <M>.
  BranchAnalysis ra = analyze_branch(r.parametrization);
  std::vector<long> gens = ra.ce.g == 0 ? std::vector<long>{1} : ra.ce.classical_generators();
  if (gens != M)
    throw InvariantViolation("recipe branch " + r.parametrization.describe() + " has generators " + join(gens) +
                             ", expected " + join(M));
  SemigroupStructure s = build_structure(gens, inv.S_real.bound());
  for (long x = 0; x <= 2 * inv.S_real.conductor; ++x)
    if (s.contains(x) != inv.S_real.contains(x))
      throw InvariantViolation("recipe semigroup differs from S at " + std::to_string(x));
  return r;
}

}  // namespace realpoincare
