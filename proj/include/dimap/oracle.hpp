#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "dimap/embedded_digraph.hpp"
#include "dimap/triangulation.hpp"

namespace dimap {

/// Upper limit on the number of in-arc selections count_arborescences visits.
inline constexpr double kArborescenceGuard = 1e7;
/// Largest digraph directed_cycles will enumerate.
inline constexpr int kCycleVertexGuard = 14;
/// Slack for inequalities between transcendental quantities.
inline constexpr double kBoundSlack = 1e-9;

/// Spanning arborescences diverging from root, by exhausting one in-arc
/// choice per non-root vertex and discarding choices that close a cycle.
/// Throws Error when the product of in-degrees exceeds kArborescenceGuard.
mpz_class count_arborescences(const EmbeddedDigraph& d, VertexId root);

struct DirectedCycle {
  std::vector<ArcId> arcs;          // starting at the cycle's smallest vertex
  std::vector<VertexId> vertices;   // tails of arcs, same order
};

/// Every simple directed cycle (loops included, parallel arcs giving distinct
/// cycles) that avoids `avoid`. Throws Error above kCycleVertexGuard vertices.
std::vector<DirectedCycle> directed_cycles(const EmbeddedDigraph& d,
                                           std::optional<VertexId> avoid = std::nullopt);

/// 1 / product of deg(v) over the vertices of the cycle.
mpq_class cycle_probability(const EmbeddedDigraph& d, const std::vector<VertexId>& vertices);

/// Sum of cycle_probability over the cycles avoiding i0.
mpq_class mu(const EmbeddedDigraph& d, VertexId i0);

struct JansonBound {
  mpq_class mu;
  mpq_class big_delta;    // half the summed joint probabilities of overlapping pairs
  mpq_class small_delta;  // max over cycles of the neighbours' summed probabilities
  mpz_class degree_product;  // over vertices other than i0
  double log_value = 0;      // ln of exp(-mu) * degree_product
  double value() const;
};

JansonBound janson_bound(const EmbeddedDigraph& d, VertexId i0);
/// tree <= exp(-mu) * prod deg, exact when mu = 0.
bool janson_holds(const JansonBound& b, const mpz_class& tree);

struct FaceBound {
  std::optional<std::string> hypothesis_violation;
  double log_value = 0;  // sum ln deg - sum over faces of p(face)
  bool applies() const { return !hypothesis_violation; }
  double value() const;
};

/// The bound over all faces. Its hypotheses: minimum degree at least 3, or
/// minimum degree 2 with at least four vertices; every face a simple cycle.
FaceBound face_bound(const EmbeddedDigraph& d);
/// Strict: ln tree < log_value, with kBoundSlack in favour of the bound.
bool face_bound_holds(const FaceBound& b, const mpz_class& tree);

struct TriangulationBoundReport {
  mpz_class tree_number;
  int n = 0;
  double log3_tree = 0;  // 3 ln tree_number
  double degree_cycle_bound = 0;
  bool degree_cycle_check = false;  // degree_cycle_bound >= 3 ln tree_number
  double vertex_bound_rhs = 0;       // (3/5) ln 6 n
  bool vertex_bound_check = false;
  bool near_homogeneous = false;
  std::optional<double> near_homogeneous_rhs;
  std::optional<bool> near_homogeneous_check;
};

/// True when exactly six vertices have degree 4 and all others degree 6.
bool is_near_homogeneous(const Triangulation& t);

/// Degree-based upper bound for 3 ln tree_number: sum over v of ln(deg/2)
/// minus, for each v, 1/prod(deg(j)/2) over its neighbours j in each of the
/// two other colour classes. Requires a valid simple triangulation, t >= 8.
double degree_cycle_bound(const Triangulation& t);

TriangulationBoundReport triangulation_bound_report(const Triangulation& t);

}  // namespace dimap
