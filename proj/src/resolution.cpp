#include "realpoincare/resolution.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "realpoincare/errors.hpp"

namespace realpoincare {

std::string to_string(PointKind k) {
  switch (k) {
    case PointKind::origin: return "origin";
    case PointKind::free: return "free";
    case PointKind::satellite: return "satellite";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// DualGraph

std::vector<int> DualGraph::neighbors(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int DualGraph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

std::vector<int> DualGraph::geodesic(int a, int b) const {
  std::map<int, int> parent{{a, 0}};
  std::queue<int> todo;
  todo.push(a);
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop();
    if (v == b) break;
    for (int w : neighbors(v))
      if (!parent.count(w)) {
        parent[w] = v;
        todo.push(w);
      }
  }
  if (!parent.count(b)) throw InvariantViolation("dual graph is disconnected");
  std::vector<int> path;
  for (int v = b; v != 0; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

IntMatrix DualGraph::intersection_matrix() const {
  IntMatrix E(static_cast<std::size_t>(size), std::vector<long>(static_cast<std::size_t>(size), 0));
  for (int v = 1; v <= size; ++v)
    E[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(v - 1)] = self_intersection[static_cast<std::size_t>(v - 1)];
  for (auto [a, b] : edges) {
    E[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = 1;
    E[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = 1;
  }
  return E;
}

bool DualGraph::is_tree() const {
  if (size == 0) return edges.empty();
  if (static_cast<int>(edges.size()) != size - 1) return false;
  for (int v = 2; v <= size; ++v) {
    try {
      geodesic(1, v);
    } catch (const InvariantViolation&) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Simulation

namespace {

enum class StopMode { minimal, split };

struct RawTrace {
  std::vector<InfinitelyNearPoint> points;  // p_1..p_{K+1}
  DualGraph graph;                          // E_1..E_K
  int delta_C = -1;                         // -1 while unresolved
  std::optional<int> rho;
  GaussianRational nonreal;
};

/// min(ord u, ord v) when decidable from the known coefficients; `u_first` tells
/// whether u attains it (ties go to u).
std::pair<int, bool> min_order(const TruncatedSeries& u, const TruncatedSeries& v) {
  auto ou = u.order();
  auto ov = v.order();
  if (ou && *ou <= v.order_lower_bound()) return {*ou, true};
  if (ov && *ov < u.order_lower_bound()) return {*ov, false};
  throw PrecisionExhausted("cannot compare orders at truncation " + std::to_string(std::min(u.truncation(), v.truncation())));
}

RawTrace simulate(const BranchParam& b, int T, StopMode mode) {
  RawTrace tr;
  TruncatedSeries u = TruncatedSeries::monomial(GaussianRational(1), b.n, T);
  TruncatedSeries v = TruncatedSeries::from_terms(
      std::vector<std::pair<int, GaussianRational>>(b.y_terms.begin(), b.y_terms.end()), T);
  int fu = 0;
  int fv = 0;

  InfinitelyNearPoint origin;
  origin.id = 1;
  origin.multiplicity = min_order(u, v).first;
  origin.kind = PointKind::origin;
  tr.points.push_back(origin);
  if (origin.multiplicity == 1) tr.delta_C = 0;
  bool all_real = true;

  for (int k = 1;; ++k) {
    if (mode == StopMode::minimal && tr.delta_C >= 0) break;
    if (mode == StopMode::split && tr.rho) break;

    // Blow up p_k, creating E_k.
    const InfinitelyNearPoint& center = tr.points.back();
    if (!min_order(u, v).second) {
      std::swap(u, v);
      std::swap(fu, fv);
    }
    v = v / u;

    tr.graph.size = k;
    tr.graph.self_intersection.push_back(-1);
    for (int j : center.proximate_to) {
      tr.graph.edges.insert({j, k});
      tr.graph.self_intersection[static_cast<std::size_t>(j - 1)] -= 1;
    }
    if (center.proximate_to.size() == 2)
      tr.graph.edges.erase({center.proximate_to[0], center.proximate_to[1]});

    fu = k;
    InfinitelyNearPoint next;
    next.id = k + 1;
    const GaussianRational c = v.coeff(0);
    if (!c.is_zero()) {
      v = v.minus_constant(c);
      fv = 0;
      next.translation = c;
    } else if (fv == 0) {
      next.translation = GaussianRational(0);
    }
    if (fv != 0) next.proximate_to = {std::min(fu, fv), std::max(fu, fv)};
    else next.proximate_to = {fu};
    next.kind = next.proximate_to.size() == 2 ? PointKind::satellite : PointKind::free;
    next.multiplicity = min_order(u, v).first;
    all_real = all_real && (!next.translation || next.translation->is_real());
    next.center_real = all_real;
    tr.points.push_back(next);

    if (tr.delta_C < 0 && fv == 0 && u.known_order() == 1) tr.delta_C = k;
    if (!tr.rho && next.translation && !next.translation->is_real()) {
      tr.rho = k;
      tr.nonreal = *next.translation;
    }
  }
  return tr;
}

RawTrace simulate_with_doubling(const BranchParam& b, int T, int cap, StopMode mode, int* used) {
  for (;; T *= 2) {
    if (T > cap)
      throw ResourceLimit("blow-up simulation exceeded the truncation cap " + std::to_string(cap));
    try {
      RawTrace tr = simulate(b, T, mode);
      if (used) *used = T;
      return tr;
    } catch (const PrecisionExhausted&) {
      // Inputs are polynomials: rerun from scratch at a higher truncation.
    }
  }
}

}  // namespace

ResolutionData resolve(const BranchParam& b, int initial_truncation, int truncation_cap) {
  require_valid(b);
  ResolutionData r;
  RawTrace tr = simulate_with_doubling(b, initial_truncation, truncation_cap, StopMode::minimal, &r.truncation_used);
  r.delta_C = tr.delta_C;
  r.points.assign(tr.points.begin(), tr.points.begin() + r.delta_C);
  r.exit_point = tr.points[static_cast<std::size_t>(r.delta_C)];
  r.graph = tr.graph;
  if (!r.graph.is_tree()) throw InvariantViolation("dual graph is not a tree");
  return r;
}

std::vector<int> rupture_vertices(const DualGraph& g, int delta_C) {
  std::vector<int> out;
  for (int v = 1; v <= g.size; ++v)
    if (g.degree(v) + (v == delta_C ? 1 : 0) >= 3) out.push_back(v);
  return out;
}

Splitting splitting_search(const BranchParam& b, const ResolutionData& r, int truncation_cap) {
  if (is_real_branch(b).is_real)
    throw DomainError("splitting point undefined: the branch is real (C = conj(C))");
  Splitting s;
  std::vector<InfinitelyNearPoint> known = r.points;
  known.push_back(r.exit_point);
  for (const auto& p : known) {
    if (p.translation && !p.translation->is_real()) {
      s.rho = p.id - 1;
      s.nonreal_translation = *p.translation;
      break;
    }
  }
  if (s.rho == 0) {
    RawTrace tr = simulate_with_doubling(b, std::max(32, r.truncation_used), truncation_cap, StopMode::split, nullptr);
    if (!tr.rho) throw InvariantViolation("split simulation ended without a non-real center");
    s.rho = *tr.rho;
    s.nonreal_translation = tr.nonreal;
    for (int id = r.delta_C + 1; id <= s.rho; ++id) s.extension.push_back(tr.points[static_cast<std::size_t>(id - 1)]);
  }
  s.late_split = s.rho >= r.delta_C;
  for (int t : rupture_vertices(r.graph, r.delta_C))
    if (t <= s.rho) ++s.q;
  return s;
}

// ---------------------------------------------------------------------------
// Matrices

IntMatrix proximity_matrix(const std::vector<InfinitelyNearPoint>& points) {
  const std::size_t K = points.size();
  IntMatrix P(K, std::vector<long>(K, 0));
  for (std::size_t i = 0; i < K; ++i) {
    P[i][i] = 1;
    for (int j : points[i].proximate_to) {
      if (j < 1 || static_cast<std::size_t>(j) > i) throw InvariantViolation("proximity to a later divisor");
      P[i][static_cast<std::size_t>(j - 1)] = -1;
    }
  }
  return P;
}

IntMatrix inverse_unitriangular(const IntMatrix& P) {
  const std::size_t K = P.size();
  IntMatrix Q(K, std::vector<long>(K, 0));
  // Row d of Q solves Q[d] P = e_d; columns are settled from d down to 1.
  for (std::size_t d = 0; d < K; ++d) {
    if (P[d][d] != 1) throw InvariantViolation("proximity matrix is not unitriangular");
    Q[d][d] = 1;
    for (std::size_t j = d; j-- > 0;) {
      long acc = 0;
      for (std::size_t i = j + 1; i <= d; ++i) acc += Q[d][i] * P[i][j];
      Q[d][j] = -acc;
    }
  }
  return Q;
}

namespace {

long dot(const std::vector<long>& a, const std::vector<long>& b) {
  long s = 0;
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) s += a[k] * b[k];
  return s;
}

IntMatrix product_with_transpose(const IntMatrix& Q) {
  const std::size_t K = Q.size();
  IntMatrix m(K, std::vector<long>(K, 0));
  for (std::size_t a = 0; a < K; ++a)
    for (std::size_t b = 0; b < K; ++b) m[a][b] = dot(Q[a], Q[b]);
  return m;
}

}  // namespace

std::vector<InfinitelyNearPoint> extended_points(const ResolutionData& r, const Splitting* split) {
  std::vector<InfinitelyNearPoint> pts = r.points;
  if (split) pts.insert(pts.end(), split->extension.begin(), split->extension.end());
  return pts;
}

MultiplicityTable multiplicity_table(const ResolutionData& r, const Splitting* split) {
  MultiplicityTable t;
  const std::size_t K = r.points.size();
  IntMatrix P = proximity_matrix(r.points);
  IntMatrix Q = inverse_unitriangular(P);
  t.m = product_with_transpose(Q);

  // E.E = -P^T P and -(E.E) m = I, exactly.
  IntMatrix E = r.graph.intersection_matrix();
  for (std::size_t a = 0; a < K; ++a)
    for (std::size_t b = 0; b < K; ++b) {
      long ptp = 0;
      for (std::size_t i = 0; i < K; ++i) ptp += P[i][a] * P[i][b];
      if (E[a][b] != -ptp) throw InvariantViolation("intersection matrix differs from -P^T P");
      long prod = 0;
      for (std::size_t i = 0; i < K; ++i) prod -= E[a][i] * t.m[i][b];
      if (prod != (a == b ? 1 : 0)) throw InvariantViolation("-(E.E) m is not the identity");
      if (t.m[a][b] <= 0) throw InvariantViolation("non-positive entry in -(E.E)^{-1}");
    }

  if (K > 0)
    for (std::size_t s = 0; s < K; ++s) t.m_sigma.push_back(t.m[s][K - 1]);

  if (split) {
    if (!split->late_split || split->extension.empty()) {
      t.m_rho = t.at(split->rho, r.delta_C);
    } else {
      auto pts = extended_points(r, split);
      IntMatrix Qe = inverse_unitriangular(proximity_matrix(pts));
      const auto& row = Qe[static_cast<std::size_t>(split->rho - 1)];
      t.m_rho = dot(row, row);
      // Noether pairing with C, which passes through every extension point simply.
      std::vector<long> mult;
      for (const auto& p : pts) mult.push_back(p.multiplicity);
      if (dot(mult, row) != t.m_rho || row != mult)
        throw InvariantViolation("late-split m_rho: curvette at rho differs from C's multiplicity sequence");
    }
  }
  return t;
}

std::vector<long> curvette_multiplicities(const ResolutionData& r, int delta, const Splitting* split) {
  auto pts = extended_points(r, split);
  if (delta < 1 || static_cast<std::size_t>(delta) > pts.size())
    throw InvariantViolation("curvette requested at unknown vertex " + std::to_string(delta));
  IntMatrix Q = inverse_unitriangular(proximity_matrix(pts));
  const auto& row = Q[static_cast<std::size_t>(delta - 1)];
  return {row.begin(), row.begin() + delta};
}

VertexClassification classify_vertices(const ResolutionData& r, const Splitting* split) {
  VertexClassification vc;
  vc.delta_C = r.delta_C;
  if (r.delta_C == 0) {
    if (split) {
      vc.rho = split->rho;
      vc.late_split = split->late_split;
    }
    return vc;
  }
  const DualGraph& g = r.graph;
  for (int v = 1; v <= g.size; ++v)
    if (v != r.delta_C && g.degree(v) == 1) vc.sigma.push_back(v);
  vc.tau = rupture_vertices(g, r.delta_C);
  if (vc.sigma.empty() || vc.sigma.front() != 1) throw InvariantViolation("E_1 is not a dead end");
  if (vc.sigma.size() != vc.tau.size() + 1)
    throw InvariantViolation("dead ends and rupture vertices do not pair up");
  if (vc.tau.back() != r.delta_C) throw InvariantViolation("delta_C is not the last rupture vertex");
  for (std::size_t i = 1; i < vc.sigma.size(); ++i) {
    if (!(vc.sigma[i] < vc.tau[i - 1])) throw InvariantViolation("sigma_i created after tau_i");
    if (i >= 2 && !(vc.tau[i - 2] < vc.sigma[i])) throw InvariantViolation("sigma_i created before tau_{i-1}");
  }
  if (split) {
    vc.rho = split->rho;
    vc.q = split->q;
    vc.late_split = split->late_split;
  }
  return vc;
}

RealGraphMirror real_graph_mirror(const ResolutionData& r, const Splitting& s) {
  RealGraphMirror out;
  auto name = [](int v, bool bar) { return std::to_string(v) + (bar ? "bar" : ""); };
  int last = std::max(r.delta_C, s.rho);
  for (int v = 1; v <= last; ++v) {
    out.vertices.push_back(name(v, false));
    if (v > s.rho) out.vertices.push_back(name(v, true));
  }
  for (auto [a, b] : r.graph.edges) {
    out.edges.emplace_back(name(a, false), name(b, false));
    if (b > s.rho) out.edges.emplace_back(name(a, a > s.rho), name(b, true));
  }
  for (int v = r.delta_C + 1; v <= s.rho; ++v)
    if (v > 1) out.edges.emplace_back(name(v - 1, false), name(v, false));
  return out;
}

}  // namespace realpoincare
