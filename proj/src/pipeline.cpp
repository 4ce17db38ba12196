#include "realpoincare/pipeline.hpp"

#include <algorithm>
#include <functional>

#include "realpoincare/errors.hpp"
#include "realpoincare/poincare.hpp"
#include "realpoincare/real_invariants.hpp"

namespace realpoincare {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Shared computation

struct Computed {
  BranchAnalysis a;
  RealityDecision reality;
  std::optional<RealInvariants> inv;  ///< non-real branches only
  std::vector<long> gens;             ///< generators of the semigroup of values on real germs
  std::vector<long> taus;             ///< N_i * gens_i
  std::vector<long> N;
  std::optional<long> m_rho;
  SemigroupStructure S;

  bool is_real() const { return reality.is_real; }
};

Computed compute(const BranchParam& b) {
  Computed c;
  c.reality = is_real_branch(b);
  c.a = analyze_branch(b);
  c.N = c.a.ce.N();
  if (!c.reality.is_real) {
    c.inv = real_generators(c.a);
    c.gens = c.inv->M_sigma;
    c.taus = c.inv->M_tau;
    c.m_rho = c.inv->m_rho;
    c.S = c.inv->S_real;
  } else {
    // A real germ's values are the classical semigroup.
    c.gens = c.a.ce.g == 0 ? std::vector<long>{1} : c.a.ce.classical_generators();
    for (std::size_t i = 1; i < c.gens.size(); ++i) c.taus.push_back(c.N[i - 1] * c.gens[i]);
    c.S = build_structure(c.gens);
  }
  return c;
}

/// Closed-form data used on the formula side of `verify`: computed values,
/// overridden by claims from the input file.
struct ClosedSide {
  std::vector<long> gens;
  std::vector<long> taus;
  std::vector<long> N;
  std::optional<long> m_rho;
  SemigroupStructure S;
};

ClosedSide closed_side(const Computed& c, const Claims& claims) {
  ClosedSide s;
  s.gens = claims.M ? *claims.M : c.gens;
  s.m_rho = claims.m_rho ? claims.m_rho : c.m_rho;
  s.S = build_structure(s.gens, 0);
  s.N = s.S.N;
  for (std::size_t i = 1; i < s.gens.size(); ++i) s.taus.push_back(s.N[i - 1] * s.gens[i]);
  return s;
}

// ---------------------------------------------------------------------------
// JSON pieces

json gaussian_json(const GaussianRational& z) { return z.to_string(); }

json point_json(const InfinitelyNearPoint& p) {
  json j = {{"id", p.id},
            {"multiplicity", p.multiplicity},
            {"kind", to_string(p.kind)},
            {"proximate_to", p.proximate_to},
            {"center_real", p.center_real}};
  j["translation"] = p.translation ? gaussian_json(*p.translation) : json(nullptr);
  return j;
}

json branch_json(const BranchParam& b) {
  json y = json::object();
  for (const auto& [e, a] : b.y_terms) y[std::to_string(e)] = a.to_string();
  return {{"n", b.n}, {"y", y}, {"text", b.describe()}};
}

json reality_json(const RealityDecision& r) {
  return {{"is_real", r.is_real},
          {"witness_k", r.witness ? json(*r.witness) : json(nullptr)},
          {"conjugation_shift", r.conjugation_shift ? json(*r.conjugation_shift) : json(nullptr)}};
}

json semigroup_json(const SemigroupStructure& s) {
  return {{"generators", s.generators}, {"e", s.e}, {"N", s.N}, {"conductor", s.conductor}};
}

json fraction_json(const CyclotomicFraction& f) {
  return {{"num", f.numerator()}, {"den", f.denominator()}, {"factored", f.to_string()}};
}

json coeff_json(const IntegerSeries& s) {
  json arr = json::array();
  for (const auto& c : s.coefficients()) {
    if (c.fits_slong_p()) arr.push_back(c.get_si());
    else arr.push_back(c.get_str());
  }
  return arr;
}

json check_json(const std::string& name, const CheckReport& r) {
  return {{"name", name}, {"ok", r.ok}, {"details", r.failures}};
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "(" + s + ")";
}

json analysis_json(const Computed& c) {
  const BranchAnalysis& a = c.a;
  json doc;
  doc["branch"] = branch_json(a.branch);
  ValidationReport v = validate(a.branch);
  doc["validation"] = {{"valid", v.valid}, {"smooth", v.smooth}, {"multiplicity", v.multiplicity}, {"message", v.message}};
  doc["reality"] = reality_json(c.reality);
  doc["char_exponents"] = {{"beta", a.ce.beta}, {"e", a.ce.e}, {"N", a.ce.N()}, {"g", a.ce.g}};
  doc["classical_generators"] = a.ce.g == 0 ? std::vector<long>{1} : a.ce.classical_generators();

  json res;
  res["delta_C"] = a.res.delta_C;
  res["truncation_used"] = a.res.truncation_used;
  res["points"] = json::array();
  for (const auto& p : a.res.points) res["points"].push_back(point_json(p));
  res["exit_point"] = point_json(a.res.exit_point);
  json edges = json::array();
  for (auto [x, y] : a.res.graph.edges) edges.push_back({x, y});
  res["graph"] = {{"vertices", a.res.graph.size}, {"edges", edges}, {"self_intersection", a.res.graph.self_intersection}};
  res["sigma"] = a.vc.sigma;
  res["tau"] = a.vc.tau;
  res["m_column"] = a.mt.m_sigma;
  doc["resolution"] = res;
  doc["semigroup"] = semigroup_json(c.S);

  if (c.is_real()) {
    doc["status"] = "real branch: C = conj(C); splitting undefined";
    doc["splitting"] = nullptr;
    doc["real_invariants"] = nullptr;
    return doc;
  }
  const Splitting& sp = *a.split;
  json split = {{"rho", sp.rho},
                {"q", sp.q},
                {"late_split", sp.late_split},
                {"nonreal_translation", gaussian_json(sp.nonreal_translation)}};
  split["extension"] = json::array();
  for (const auto& p : sp.extension) split["extension"].push_back(point_json(p));
  doc["splitting"] = split;

  const RealInvariants& inv = *c.inv;
  ConjugateBranchRecipe rec = conjugate_branch_recipe(inv);
  doc["real_invariants"] = {{"M_sigma", inv.M_sigma},
                            {"M_tau", inv.M_tau},
                            {"m_rho", inv.m_rho},
                            {"q", inv.q},
                            {"late_split", inv.late_split},
                            {"recipe_b", rec.b},
                            {"recipe_parametrization", rec.parametrization.describe()}};
  doc["status"] = "non-real branch";

  RealGraphMirror mirror = real_graph_mirror(a.res, sp);
  json medges = json::array();
  for (const auto& [x, y] : mirror.edges) medges.push_back({x, y});
  doc["real_graph_mirror"] = {{"vertices", mirror.vertices}, {"edges", medges}};
  return doc;
}

// ---------------------------------------------------------------------------
// Checks run by `verify`

CheckReport matrix_invariants(const Computed& c) {
  CheckReport rep;
  const ResolutionData& r = c.a.res;
  const std::size_t K = r.points.size();
  IntMatrix P = proximity_matrix(r.points);
  IntMatrix E = r.graph.intersection_matrix();
  const IntMatrix& m = c.a.mt.m;
  for (std::size_t s = 0; s < K; ++s)
    for (std::size_t d = 0; d < K; ++d) {
      long ptp = 0;
      long prod = 0;
      for (std::size_t i = 0; i < K; ++i) {
        ptp += P[i][s] * P[i][d];
        prod -= E[s][i] * m[i][d];
      }
      const std::string at = "(" + std::to_string(s + 1) + "," + std::to_string(d + 1) + ")";
      if (E[s][d] != -ptp) rep.fail("E.E != -P^T P at " + at);
      if (prod != (s == d ? 1 : 0)) rep.fail("-(E.E) m != I at " + at);
      if (m[s][d] <= 0) rep.fail("m not positive at " + at);
    }
  const auto& vc = c.a.vc;
  for (int i = 1; i <= vc.g(); ++i) {
    const long mt = c.a.mt.m_of(vc.tau[static_cast<std::size_t>(i - 1)]);
    const long ms = c.a.mt.m_of(vc.sigma[static_cast<std::size_t>(i)]);
    if (mt != c.N[static_cast<std::size_t>(i - 1)] * ms)
      rep.fail("m_tau_" + std::to_string(i) + " = " + std::to_string(mt) + " != N_i m_sigma_i = " +
               std::to_string(c.N[static_cast<std::size_t>(i - 1)] * ms));
  }
  return rep;
}

CheckReport claims_check(const Computed& c, const Claims& claims) {
  CheckReport rep;
  if (claims.M && *claims.M != c.gens)
    rep.fail("claimed M = " + join(*claims.M) + ", computed M = " + join(c.gens));
  if (claims.m_rho) {
    if (!c.m_rho) rep.fail("claimed m_rho = " + std::to_string(*claims.m_rho) + " for a real branch");
    else if (*claims.m_rho != *c.m_rho)
      rep.fail("claimed m_rho = " + std::to_string(*claims.m_rho) + ", computed m_rho = " + std::to_string(*c.m_rho));
  }
  return rep;
}

CheckReport semigroup_series_check(const std::vector<long>& gens, const std::vector<long>& taus, long upto) {
  CheckReport rep;
  IntegerSeries ps = expand(semigroup_series(gens, taus), static_cast<int>(upto));
  auto in = semigroup_enumerate(gens, upto);
  for (long a = 0; a <= upto; ++a)
    if (ps[static_cast<int>(a)] != (in[static_cast<std::size_t>(a)] ? 1 : 0)) {
      rep.fail("a = " + std::to_string(a) + ": P^S coefficient " + ps[static_cast<int>(a)].get_str() +
               ", membership " + (in[static_cast<std::size_t>(a)] ? "1" : "0"));
      if (rep.failures.size() >= 10) break;
    }
  return rep;
}

CheckReport series_identity_check(const CyclotomicFraction& ps, long m_rho, int order) {
  CheckReport rep;
  auto [P, PR] = classical_and_real_series(ps, m_rho);
  // As fractions: (1 + t^m) = (1 - t^{2m}) / (1 - t^m).
  if (!P.is_normalized() || !PR.is_normalized()) rep.fail("fractions are not normalized");
  std::vector<long> num = ps.numerator();
  std::vector<long> den = ps.denominator();
  num.push_back(2 * m_rho);
  den.push_back(m_rho);
  const CyclotomicFraction raw_P(num, den, false);
  if (raw_P.normalized() != P) rep.fail("normalized P differs from P^S (1 - t^{2m}) / (1 - t^m)");

  IntegerSeries s = expand(ps, order);
  IntegerSeries p = expand(P, order);
  IntegerSeries pr = expand(PR, order);
  if (expand(raw_P, order) != p) rep.fail("normalization changes the expansion of P");
  IntegerSeries shifted = s.shifted(static_cast<int>(m_rho));
  for (int a = 0; a <= order; ++a) {
    const std::string at = "a = " + std::to_string(a);
    if (p[a] != s[a] + shifted[a]) rep.fail(at + ": P != P^S (1 + t^m_rho)");
    if (pr[a] != s[a] - shifted[a]) rep.fail(at + ": P^R != P^S (1 - t^m_rho)");
    if (p[a] + pr[a] != 2 * s[a]) rep.fail(at + ": P + P^R != 2 P^S");
    if (pr[a] < 0 || pr[a] > 1) rep.fail(at + ": P^R coefficient " + pr[a].get_str() + " outside {0,1}");
    if (rep.failures.size() >= 10) break;
  }
  return rep;
}

CheckReport low_order_check(const DimensionProfile& oracle, const SemigroupStructure& S, long m_rho) {
  CheckReport rep;
  if (oracle.bound() < m_rho) {
    rep.fail("oracle range ends before m_rho");
    return rep;
  }
  for (long a = 0; a < m_rho; ++a)
    if (S.contains(a) && oracle.dims[static_cast<std::size_t>(a)] != 1)
      rep.fail("a = " + std::to_string(a) + " in S below m_rho has dimension " +
               std::to_string(oracle.dims[static_cast<std::size_t>(a)]));
  if (oracle.dims[static_cast<std::size_t>(m_rho)] != 2)
    rep.fail("dimension at m_rho = " + std::to_string(m_rho) + " is " +
             std::to_string(oracle.dims[static_cast<std::size_t>(m_rho)]));
  return rep;
}

CheckReport unique_representation_check(const ClosedSide& s, const std::vector<long>& N) {
  CheckReport rep;
  if (s.gens.size() != N.size() + 1) {
    rep.fail("generator count does not match the N-chain");
    return rep;
  }
  for (long a = 0; a <= 2 * s.S.conductor; ++a) {
    const long k = count_representations(s.gens, N, a);
    if (k != (s.S.contains(a) ? 1 : 0)) {
      rep.fail("a = " + std::to_string(a) + " has " + std::to_string(k) + " representations");
      if (rep.failures.size() >= 10) break;
    }
  }
  return rep;
}

template <class F>
CheckReport guarded(F&& f) {
  try {
    return f();
  } catch (const InvariantViolation& e) {
    CheckReport r;
    r.fail(e.what());
    return r;
  } catch (const DomainError& e) {
    CheckReport r;
    r.fail(e.what());
    return r;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Commands

Outcome cmd_analyze(const InputFile& in, const RunOptions&) {
  Computed c = compute(in.branch);
  Outcome o;
  o.doc = analysis_json(c);
  o.doc["command"] = "analyze";
  return o;
}

Outcome cmd_series(const InputFile& in, const RunOptions& opt) {
  Computed c = compute(in.branch);
  Outcome o;
  json& doc = o.doc;
  doc["command"] = "series";
  doc["branch"] = branch_json(in.branch);
  const int order = static_cast<int>(opt.order.value_or(default_series_order(c.S.conductor, c.m_rho.value_or(0))));
  if (order < 0) throw ValidationError("--order must be non-negative");

  const CyclotomicFraction ps = semigroup_series(c.gens, c.taus);
  const bool want_s = opt.which == Which::s || opt.which == Which::all;
  const bool want_p = opt.which == Which::classical || opt.which == Which::all;
  const bool want_r = opt.which == Which::real || opt.which == Which::all;
  doc["expansion"] = {{"order", order}};

  if (want_s || c.is_real()) {
    doc["PS"] = fraction_json(ps);
    doc["expansion"]["PS"] = coeff_json(expand(ps, order));
  }
  if (c.is_real()) {
    if (want_p || want_r) {
      doc["refusal"] = "P and P^R are undefined for a real branch (C = conj(C)); only P^S is given";
      // An explicit request for an undefined series is a domain error.
      if (opt.which != Which::all) o.code = exit_code::domain;
    }
    return o;
  }
  doc["m_rho"] = *c.m_rho;
  auto [P, PR] = classical_and_real_series(ps, *c.m_rho);
  if (want_p) {
    doc["P"] = fraction_json(P);
    doc["expansion"]["P"] = coeff_json(expand(P, order));
  }
  if (want_r) {
    doc["PR"] = fraction_json(PR);
    doc["expansion"]["PR"] = coeff_json(expand(PR, order));
  }
  return o;
}

Outcome cmd_verify(const InputFile& in, const RunOptions& opt) {
  Computed c = compute(in.branch);
  Outcome o;
  json& doc = o.doc;
  doc["command"] = "verify";
  doc["branch"] = branch_json(in.branch);
  doc["real_branch"] = c.is_real();
  json checks = json::array();
  bool all_ok = true;
  auto record = [&](const std::string& name, const CheckReport& r) {
    all_ok = all_ok && r.ok;
    checks.push_back(check_json(name, r));
  };

  const long c0 = c.S.conductor;
  const long mr = c.m_rho.value_or(0);
  const long range_hi = opt.max_order.value_or(c0 + mr + 10);
  if (range_hi < 0) throw ValidationError("--max-order must be non-negative");

  record("matrix invariants", guarded([&] { return matrix_invariants(c); }));
  record("claims", claims_check(c, in.claims));

  std::optional<ClosedSide> cs;
  try {
    cs = closed_side(c, in.claims);
  } catch (const DomainError& e) {
    CheckReport r;
    r.fail(std::string("closed form from the claimed values: ") + e.what());
    record("closed form", r);
  }

  if (cs) {
    record("generator structure", guarded([&] { return generator_structure_check(cs->gens, c.N); }));
    record("unique representation", guarded([&] { return unique_representation_check(*cs, c.N); }));
    record("semigroup series vs enumeration",
           guarded([&] { return semigroup_series_check(cs->gens, cs->taus, 2 * cs->S.conductor + 50); }));
    if (cs->m_rho) {
      const CyclotomicFraction ps = semigroup_series(cs->gens, cs->taus);
      const int order = default_series_order(cs->S.conductor, *cs->m_rho);
      record("classical and real series identities", guarded([&] { return series_identity_check(ps, *cs->m_rho, order); }));
    }
  }
  if (!c.is_real()) {
    record("geodesic property", guarded([&] { return geodesic_property_check(*c.inv, c.a); }));
    record("conjugate-branch recipe", guarded([&] {
             conjugate_branch_recipe(*c.inv);  // throws on any disagreement
             return CheckReport{};
           }));
  }

  // Formula side against the definition.
  OracleResult orc = dims_bruteforce(in.branch, range_hi, opt.size_cap);
  json vr = {{"range", {0, range_hi}},
             {"D_used", orc.D},
             {"matrix_shape", {orc.rows, orc.cols}},
             {"agree", true},
             {"mismatches", json::array()}};
  if (cs) {
    const int hi = static_cast<int>(range_hi);
    const CyclotomicFraction ps = semigroup_series(cs->gens, cs->taus);
    SeriesBundle sb{expand(ps, hi), std::nullopt, std::nullopt};
    if (cs->m_rho) {
      auto [P, PR] = classical_and_real_series(ps, *cs->m_rho);
      sb.P = expand(P, hi);
      sb.PR = expand(PR, hi);
    } else {
      // Real branch: dim J(a)/J(a+1) = [a in S], generated by P^S itself.
      sb.P = sb.PS;
    }
    const DimensionProfile closed = dimension_profile_closed_form(cs->S, cs->m_rho, range_hi);
    VerificationReport rep = compare(closed, &orc.profile, sb, semigroup_enumerate(cs->gens, range_hi), cs->m_rho,
                                     range_hi);
    vr["agree"] = rep.agree;
    for (const auto& m : rep.mismatches)
      vr["mismatches"].push_back({{"a", m.a}, {"expected", m.expected}, {"got", m.got}, {"sources", m.sources}});
    all_ok = all_ok && rep.agree;

    if (cs->m_rho) record("low orders below m_rho", low_order_check(orc.profile, cs->S, *cs->m_rho));
    const DimensionProfile sym =
        dimension_profile_closed_form(cs->S, cs->m_rho, cs->S.conductor + cs->m_rho.value_or(0));
    record("symmetry", symmetry_check(sym, cs->S, cs->m_rho));
  }
  doc["checks"] = checks;
  doc["report"] = vr;
  doc["agree"] = all_ok;
  o.code = all_ok ? exit_code::ok : exit_code::mismatch;
  return o;
}

Outcome cmd_conjugate(const InputFile& in, const RunOptions&) {
  Computed c = compute(in.branch);
  if (c.is_real()) throw DomainError("conjugate-branch recipe is undefined for a real branch (C = conj(C))");
  ConjugateBranchRecipe rec = conjugate_branch_recipe(*c.inv);
  BranchAnalysis ra = analyze_branch(rec.parametrization);
  std::vector<long> gens = ra.ce.g == 0 ? std::vector<long>{1} : ra.ce.classical_generators();
  Outcome o;
  o.doc = {{"command", "conjugate"},
           {"branch", branch_json(in.branch)},
           {"M_sigma", c.inv->M_sigma},
           {"N", c.N},
           {"b", rec.b},
           {"recipe", rec.parametrization.describe()},
           {"recipe_text", rec.parametrization.emit()},
           {"recipe_generators", gens},
           {"semigroup_equal", gens == c.inv->M_sigma}};
  return o;
}

}  // namespace realpoincare
