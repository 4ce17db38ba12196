// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "realpoincare/errors.hpp"
#include "realpoincare/oracle.hpp"
#include "realpoincare/pipeline.hpp"
#include "realpoincare/poincare.hpp"
#include "realpoincare/real_invariants.hpp"
#include "realpoincare/resolution.hpp"
#include "realpoincare/semigroup.hpp"
#include "support.hpp"

using namespace realpoincare;
using testsupport::corpus;

namespace {

const std::vector<std::string> kCorpus = {
    "quartic_alpha_i", "quartic_split_tau1", "quartic_split_late", "cusp",          "smooth",
    "real_in_disguise", "g3_alpha_i",      "g3_split_tau1",     "cusp_twisted",  "cusp_late_split",
    "smooth_nonreal",   "swapped"};

const std::vector<std::string> kNegatives = {"quartic_alpha_i_bad_mrho", "quartic_alpha_i_bad_M",
                                             "quartic_split_late_bad_mrho", "quartic_split_tau1_bad_M"};

InputFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_input(ss.str());
}

BranchParam load_branch(const std::string& name) { return load(corpus(name + ".branch")).branch; }

std::string str(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "(" + s + ")";
}

// Failure notes collected by one criterion.
struct Notes {
  std::vector<std::string> items;
  void operator()(bool ok, const std::string& what) {
    if (!ok) items.push_back(what);
  }
};

std::optional<RealInvariants> invariants_of(const BranchParam& b) {
  if (is_real_branch(b).is_real) return std::nullopt;
  return real_generators(analyze_branch(b));
}

// Semigroup of the branch: the real one when it splits, the classical one otherwise.
SemigroupStructure semigroup_of(const BranchParam& b, const std::optional<RealInvariants>& inv) {
  if (inv) return inv->S_real;
  CharExponents ce = char_exponents(b);
  return build_structure(ce.g == 0 ? std::vector<long>{1} : ce.classical_generators());
}

void criterion1(Notes& note) {
  struct Case {
    std::string file;
    std::vector<long> M;
    std::string recipe;
  };
  for (const Case& c : {Case{"quartic_alpha_i", {4, 10, 21}, "(t^4, t^10 + t^11)"},
                        Case{"quartic_split_tau1", {4, 6, 25}, "(t^4, t^6 + t^19)"},
                        Case{"quartic_split_late", {4, 6, 13}, "(t^4, t^6 + t^7)"}}) {
    RealInvariants inv = *invariants_of(load_branch(c.file));
    note(inv.M_sigma == c.M, c.file + ": M = " + str(inv.M_sigma));
    ConjugateBranchRecipe rec = conjugate_branch_recipe(inv);
    note(rec.parametrization.describe() == c.recipe, c.file + ": recipe " + rec.parametrization.describe());

    // The recipe branch is real, so its semigroup is the classical one.
    BranchAnalysis ra = analyze_branch(rec.parametrization);
    SemigroupStructure rs = build_structure(ra.ce.classical_generators());
    const long bound = 2 * inv.S_real.conductor;
    note(rs.conductor == inv.S_real.conductor, c.file + ": recipe conductor differs");
    for (long a = 0; a <= bound; ++a)
      if (rs.contains(a) != inv.S_real.contains(a)) {
        note(false, c.file + ": recipe membership differs at " + std::to_string(a));
        break;
      }
  }
}

void criterion2(Notes& note) {
  for (const auto& name : kCorpus) {
    BranchParam b = load_branch(name);
    auto inv = invariants_of(b);
    SemigroupStructure S = semigroup_of(b, inv);
    CyclotomicFraction ps = inv ? semigroup_series(*inv) : [&] {
      std::vector<long> taus;
      for (std::size_t i = 1; i < S.generators.size(); ++i) taus.push_back(S.N[i - 1] * S.generators[i]);
      return semigroup_series(S.generators, taus);
    }();
    const long top = 2 * S.conductor + 50;
    IntegerSeries e = expand(ps, static_cast<int>(top));
    std::vector<bool> dp = semigroup_enumerate(S.generators, top);
    for (long a = 0; a <= top; ++a)
      if (e[static_cast<int>(a)] != (dp[static_cast<std::size_t>(a)] ? 1 : 0)) {
        note(false, name + ": P^S coefficient differs at " + std::to_string(a));
        break;
      }
  }
}

void criterion3(Notes& note) {
  for (const auto& name : kCorpus) {
    auto inv = invariants_of(load_branch(name));
    if (!inv) continue;
    const long mr = inv->m_rho;
    CyclotomicFraction ps = semigroup_series(*inv);
    ClassicalAndReal cr = classical_and_real_series(ps, mr);
    // (1 + t^m) = (1 - t^{2m}) / (1 - t^m), normalized independently.
    CyclotomicFraction P = ps * CyclotomicFraction({2 * mr}, {mr});
    CyclotomicFraction PR = ps * CyclotomicFraction({mr}, {});
    note(cr.P == P && cr.P.is_normalized(), name + ": P fraction");
    note(cr.PR == PR && cr.PR.is_normalized(), name + ": P^R fraction");

    const int order = default_series_order(inv->S_real.conductor, mr);
    IntegerSeries s = expand(ps, order), p = expand(cr.P, order), r = expand(cr.PR, order);
    note(p == s + s.shifted(static_cast<int>(mr)), name + ": P coefficients");
    note(r == s - s.shifted(static_cast<int>(mr)), name + ": P^R coefficients");
    note(p + r == s.scaled(2), name + ": P + P^R != 2 P^S");
  }
}

void criterion4(Notes& note) {
  struct Case {
    std::string file;
    long first_two;  // first a with dim 2; 0 when not pinned
  };
  for (const Case& c : {Case{"quartic_alpha_i", 4}, Case{"quartic_split_tau1", 0}, Case{"quartic_split_late", 26},
                        Case{"cusp", 0}}) {
    const auto t0 = std::chrono::steady_clock::now();
    BranchParam b = load_branch(c.file);
    auto inv = invariants_of(b);
    SemigroupStructure S = semigroup_of(b, inv);
    std::optional<long> mr;
    if (inv) mr = inv->m_rho;
    const long hi = S.conductor + (mr ? *mr : 0) + 10;
    DimensionProfile closed = dimension_profile_closed_form(S, mr, hi);
    OracleResult o = dims_bruteforce(b, hi);
    for (long a = 0; a <= hi; ++a)
      if (closed.dims[static_cast<std::size_t>(a)] != o.profile.dims[static_cast<std::size_t>(a)]) {
        note(false, c.file + ": oracle differs at a = " + std::to_string(a));
        break;
      }
    if (c.first_two) {
      long first = -1;
      for (long a = 0; a <= hi && first < 0; ++a)
        if (o.profile.dims[static_cast<std::size_t>(a)] == 2) first = a;
      note(first == c.first_two, c.file + ": first dim 2 at " + std::to_string(first));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    note(secs < 30.0, c.file + ": took " + std::to_string(secs) + " s");
  }
}

void criterion5(Notes& note) {
  for (const auto& name : kCorpus) {
    BranchParam b = load_branch(name);
    auto inv = invariants_of(b);
    if (!inv) continue;
    OracleResult o = dims_bruteforce(b, inv->m_rho);
    for (long a = 0; a < inv->m_rho; ++a)
      if (inv->S_real.contains(a)) note(o.profile.dims[static_cast<std::size_t>(a)] == 1, name + ": dim != 1 at " + std::to_string(a));
    note(o.profile.dims[static_cast<std::size_t>(inv->m_rho)] == 2, name + ": dim != 2 at m_rho");
  }
}

void criterion6(Notes& note) {
  for (const auto& name : kCorpus) {
    BranchParam b = load_branch(name);
    auto inv = invariants_of(b);
    SemigroupStructure S = semigroup_of(b, inv);
    const long c = S.conductor;
    for (long a = 0; a <= c - 1; ++a)
      if (S.contains(a) == S.contains(c - 1 - a)) {
        note(false, name + ": semigroup not symmetric at " + std::to_string(a));
        break;
      }
    if (!inv) continue;
    const long mr = inv->m_rho;
    DimensionProfile dp = dimension_profile_closed_form(S, mr, c + mr);
    for (long a = 0; a <= c + mr - 1; ++a)
      if (dp.dims[static_cast<std::size_t>(a)] + dp.dims[static_cast<std::size_t>(c + mr - 1 - a)] != 2) {
        note(false, name + ": dims not symmetric at " + std::to_string(a));
        break;
      }
  }
}

void criterion7(Notes& note) {
  for (const auto& name : kCorpus) {
    BranchParam b = load_branch(name);
    auto inv = invariants_of(b);
    SemigroupStructure S = semigroup_of(b, inv);
    const auto& M = S.generators;
    if (M.size() == 1) {
      note(M[0] == 1, name + ": smooth semigroup");
      continue;
    }
    // Clauses by enumeration of the prefix semigroups.
    for (std::size_t i = 1; i < M.size(); ++i) {
      const long Ni = S.N[i - 1];
      std::vector<long> prior(M.begin(), M.begin() + static_cast<long>(i));
      std::vector<bool> mem = semigroup_enumerate(prior, Ni * M[i]);
      note(!mem[static_cast<std::size_t>((Ni - 1) * M[i])], name + ": (N-1)M in prior, i = " + std::to_string(i));
      note(mem[static_cast<std::size_t>(Ni * M[i])], name + ": NM not in prior, i = " + std::to_string(i));
      if (i + 1 < M.size()) note(Ni * M[i] < M[i + 1], name + ": NM >= next generator");
    }
    // Minimal generation: no generator is a combination of the others.
    for (std::size_t i = 0; i < M.size(); ++i) {
      std::vector<long> rest;
      for (std::size_t j = 0; j < M.size(); ++j)
        if (j != i) rest.push_back(M[j]);
      note(!semigroup_enumerate(rest, M[i])[static_cast<std::size_t>(M[i])], name + ": generator not minimal");
    }
    CheckReport structure = generator_structure_check(M, S.N);
    note(structure.ok, name + ": generator_structure_check");
  }
}

void criterion8(Notes& note) {
  for (const auto& name : kCorpus) {
    BranchParam b = load_branch(name);
    ResolutionData r = resolve(b);
    const bool real = is_real_branch(b).is_real;
    std::optional<Splitting> sp;
    if (!real) sp = splitting_search(b, r);
    MultiplicityTable mt = multiplicity_table(r, sp ? &*sp : nullptr);
    const IntMatrix E = r.graph.intersection_matrix();
    const IntMatrix P = proximity_matrix(r.points);
    const std::size_t n = E.size();
    bool ee = true, inv = true, pos = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        long ptp = 0, prod = 0;
        for (std::size_t k = 0; k < n; ++k) {
          ptp += P[k][i] * P[k][j];
          prod += -E[i][k] * mt.m[k][j];
        }
        ee = ee && E[i][j] == -ptp;
        inv = inv && prod == (i == j ? 1 : 0);
        pos = pos && mt.m[i][j] > 0;
      }
    note(ee, name + ": E != -P^T P");
    note(inv, name + ": -E m != I");
    note(pos, name + ": nonpositive m entry");
    VertexClassification vc = classify_vertices(r);
    CharExponents ce = char_exponents(b);
    for (int i = 0; i < ce.g; ++i)
      note(mt.m_of(vc.tau[static_cast<std::size_t>(i)]) == ce.N()[static_cast<std::size_t>(i)] * mt.m_of(vc.sigma[static_cast<std::size_t>(i + 1)]),
           name + ": m_tau != N m_sigma at i = " + std::to_string(i + 1));
  }
  MultiplicityTable cusp = multiplicity_table(resolve(load_branch("cusp")));
  note(cusp.m == IntMatrix{{1, 1, 2}, {1, 2, 3}, {2, 3, 6}}, "cusp table");
}

void criterion9(Notes& note) {
  RealityDecision d = is_real_branch(load_branch("real_in_disguise"));
  note(d.is_real && d.witness == 3, "(t^8, (1+i)t^9) not real with witness 3");
  note(!is_real_branch(load_branch("quartic_alpha_i")).is_real, "(t^4, i t^4 + ...) classified real");
  note(!is_real_branch(testsupport::branch(4, "i*t^6 + t^7")).is_real, "(t^4, i t^6 + t^7) classified real");
  // Exhaustive agreement on every corpus branch and a grid of small ones.
  std::vector<BranchParam> all;
  for (const auto& name : kCorpus) all.push_back(load_branch(name));
  const std::vector<std::string> cs{"1", "i", "3", "(1+i)", "(1-i)", "(2-i)"};
  for (int n : {2, 3, 4, 6, 8})
    for (const auto& a : cs)
      for (const auto& c : cs) all.push_back(testsupport::branch(n, a + "*t^" + std::to_string(n + 1) + " + " + c + "*t^" + std::to_string(n + 3)));
  for (const auto& b : all) {
    RealityDecision r = is_real_branch(b);
    note(r.is_real == testsupport::brute_conjugation_shift(b).has_value(), b.describe() + ": reality disagrees");
    note(r.witness.has_value() == testsupport::brute_real_witness(b).has_value(), b.describe() + ": witness disagrees");
  }
}

void criterion10(Notes& note) {
  for (const auto& name : kNegatives) {
    Outcome o = cmd_verify(load(corpus("negative/" + name + ".branch")), RunOptions{});
    note(o.code == exit_code::mismatch, name + ": exit " + std::to_string(o.code));
    const auto& mm = o.doc["report"]["mismatches"];
    bool claims_failed = false;
    for (const auto& c : o.doc["checks"])
      if (c["name"] == "claims" && !c["ok"].get<bool>()) claims_failed = true;
    note(claims_failed, name + ": claims check did not fail");
    note(!mm.empty() && mm[0].contains("a"), name + ": no localized mismatch");
  }
  // Corrupt m_rho: the first disagreement sits at min(true, claimed) m_rho.
  Outcome o = cmd_verify(load(corpus("negative/quartic_alpha_i_bad_mrho.branch")), RunOptions{});
  note(!o.doc["report"]["mismatches"].empty() && o.doc["report"]["mismatches"][0]["a"] == 4, "bad m_rho not localized at 4");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Notes&)>>> criteria = {
      {"quartic generators and conjugate-branch recipes", criterion1},
      {"P^S against semigroup enumeration to 2c+50", criterion2},
      {"P = P^S(1+t^m_rho), P^R = P^S(1-t^m_rho)", criterion3},
      {"closed-form dims against the jet-matrix oracle", criterion4},
      {"dims 1 below m_rho and 2 at m_rho", criterion5},
      {"symmetry of S and of dims", criterion6},
      {"generator structure of <M>", criterion7},
      {"intersection and multiplicity matrices", criterion8},
      {"reality decision", criterion9},
      {"corrupted fixtures exit 4 with a localized diff", criterion10}};

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Notes notes;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(notes);
    } catch (const std::exception& e) {
      notes.items.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = notes.items.empty();
    failed += ok ? 0 : 1;
    std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << " — " << criteria[i].first << " ("
              << std::fixed << std::setprecision(2) << secs << " s)\n";
    for (const auto& s : notes.items) std::cout << "    " << s << "\n";
  }
  return failed == 0 ? 0 : 1;
}
