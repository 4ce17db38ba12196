#pragma once

// Blow-up simulation of a branch with exact arithmetic: infinitely near points,
// proximity, dual graph, splitting point and the matrix (m_sd) = -(E.E)^{-1}.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "realpoincare/arith.hpp"
#include "realpoincare/branch.hpp"

namespace realpoincare {

using IntMatrix = std::vector<std::vector<long>>;

enum class PointKind { origin, free, satellite };

std::string to_string(PointKind k);

struct InfinitelyNearPoint {
  int id = 0;            ///< 1-based; blowing up p_id creates E_id
  int multiplicity = 0;  ///< of the strict transform of C at this point
  std::vector<int> proximate_to;  ///< ascending divisor ids through the point
  PointKind kind = PointKind::origin;
  /// Conjugation-fixed center: every translation up to and including this point is real.
  bool center_real = true;
  /// Coordinate of a free point on the divisor it lies on (0 allowed).
  std::optional<GaussianRational> translation;
};

struct DualGraph {
  int size = 0;                         ///< vertices 1..size
  std::set<std::pair<int, int>> edges;  ///< (i, j) with i < j
  std::vector<long> self_intersection;  ///< index id-1

  std::vector<int> neighbors(int v) const;
  int degree(int v) const;
  /// Vertices of the unique path from a to b, both included.
  std::vector<int> geodesic(int a, int b) const;
  /// Symmetric matrix E.E (self-intersections on the diagonal, 1 on edges).
  IntMatrix intersection_matrix() const;
  bool is_tree() const;
};

/// Minimal embedded resolution of C (points p_1..p_{delta_C}).
struct ResolutionData {
  std::vector<InfinitelyNearPoint> points;
  DualGraph graph;
  int delta_C = 0;  ///< 0 for a smooth branch (no blow-up needed)
  /// The point of E_{delta_C} met by the resolved strict transform (free, multiplicity 1).
  InfinitelyNearPoint exit_point;
  int truncation_used = 0;
};

struct Splitting {
  int rho = 0;      ///< last divisor common to the resolutions of C and conj(C)
  int q = 0;        ///< max i with tau_i <= rho in creation order, 0 if none
  bool late_split = false;  ///< the split happens after C is resolved
  /// Points p_{delta_C+1}..p_rho of the real resolution beyond delta_C (late-split only).
  std::vector<InfinitelyNearPoint> extension;
  /// Translation of the first non-real free point, which lies on E_rho.
  GaussianRational nonreal_translation;
};

struct VertexClassification {
  std::vector<int> sigma;  ///< sigma_0 = 1, ..., sigma_g (dead ends)
  std::vector<int> tau;    ///< tau_1..tau_g (rupture vertices)
  int delta_C = 0;
  int rho = 0;
  int q = 0;
  bool late_split = false;
  int g() const { return static_cast<int>(tau.size()); }
};

struct MultiplicityTable {
  IntMatrix m;                 ///< m[s][d], ids shifted by one
  std::vector<long> m_sigma;   ///< column at delta_C
  long m_rho = 0;

  long at(int s, int d) const { return m.at(static_cast<std::size_t>(s - 1)).at(static_cast<std::size_t>(d - 1)); }
  long m_of(int s) const { return m_sigma.at(static_cast<std::size_t>(s - 1)); }
};

/// Simulates the blow-ups resolving C. Precision exhaustion restarts the run at a
/// doubled truncation; ResourceLimit beyond `truncation_cap`.
ResolutionData resolve(const BranchParam& b, int initial_truncation = 32, int truncation_cap = 1 << 15);

/// Rupture vertices in creation order; the strict transform counts as an extra
/// neighbour of delta_C.
std::vector<int> rupture_vertices(const DualGraph& g, int delta_C);

/// Requires a non-real branch (DomainError otherwise).
Splitting splitting_search(const BranchParam& b, const ResolutionData& r, int truncation_cap = 1 << 15);

/// Lower unitriangular proximity matrix: 1 on the diagonal, -1 at (i, j) when p_i
/// is proximate to E_j.
IntMatrix proximity_matrix(const std::vector<InfinitelyNearPoint>& points);
/// Exact inverse of a lower unitriangular integer matrix (forward substitution).
IntMatrix inverse_unitriangular(const IntMatrix& P);

/// -(E.E)^{-1} computed as P^{-1} P^{-T}; checked against the graph's intersection
/// matrix. With a splitting, m_rho is read from the table (or from the extended
/// proximity matrix in the late-split case).
MultiplicityTable multiplicity_table(const ResolutionData& r, const Splitting* split = nullptr);

VertexClassification classify_vertices(const ResolutionData& r, const Splitting* split = nullptr);

/// Multiplicities of a curvette at E_delta at p_1..p_delta (row delta of P^{-1}).
/// Accepts ids in the late-split extension when `split` is given.
std::vector<long> curvette_multiplicities(const ResolutionData& r, int delta, const Splitting* split = nullptr);

/// All points of the real resolution of C used by the computation: p_1..p_{delta_C}
/// followed by the late-split extension, if any.
std::vector<InfinitelyNearPoint> extended_points(const ResolutionData& r, const Splitting* split);

/// Display-only reconstruction of the real resolution graph: the post-rho part is
/// mirrored for conj(C).
struct RealGraphMirror {
  std::vector<std::string> vertices;                       ///< "3", "4", "4bar", ...
  std::vector<std::pair<std::string, std::string>> edges;
};
RealGraphMirror real_graph_mirror(const ResolutionData& r, const Splitting& s);

}  // namespace realpoincare
