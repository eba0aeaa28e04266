#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "dimap/embedded_digraph.hpp"
#include "dimap/triangulation.hpp"

namespace dimap {

/// Two vertices joined by m arcs in each direction, alternating around both.
/// Arc 2j runs v0 -> v1 and arc 2j+1 runs v1 -> v0.
EmbeddedDigraph dipole(int m);

/// Identify v1 of D1 with v2 of D2. D1 keeps its ids; the other vertices of
/// D2 follow in order, and D2's arcs follow D1's. The merged rotation is the
/// rotation of v1 followed by that of v2, each started at an out dart.
EmbeddedDigraph wedge(const EmbeddedDigraph& d1, VertexId v1, const EmbeddedDigraph& d2,
                      VertexId v2);

/// Dipoles of the given multiplicities glued along a path.
EmbeddedDigraph realization_digraph(const std::vector<int>& orders);
/// Triangulation whose canonical group is the direct sum of Z_m over the
/// given orders. Throws Error if any order is below 2.
Triangulation abelian_realization(const std::vector<int>& orders);

/// For a1 = u -> u' in D1 and a2 = w -> w' in D2: delete both arcs, identify
/// u with w', and add an arc w -> u'. The new arc gets the last id; the
/// remaining arcs keep their relative order, D1's first.
EmbeddedDigraph arc_splice(const EmbeddedDigraph& d1, ArcId a1, const EmbeddedDigraph& d2,
                           ArcId a2);

/// Put a hub vertex u inside face f (walk v0 -> v1 -> ... -> v_{k-1}) and join
/// it to every v_j by arcs u -> v_j (id A + 2j) and v_j -> u (id A + 2j + 1).
/// The face becomes k triangles and k digons. Requires k > 2, every v_j of
/// degree 2, more than k vertices in D and distinct vertices on f.
EmbeddedDigraph subdivide_face(const EmbeddedDigraph& d, const FaceWalk& f);

/// Why subdivide_face would refuse f, or nullopt if it applies.
std::optional<std::string> subdivision_obstacle(const EmbeddedDigraph& d, const FaceWalk& f);

/// Sum over j < k of (k / 2^j) * C(k-1, j): the guaranteed growth factor of
/// the tree number under subdivide_face.
mpq_class subdivision_factor(int k);

/// First face of size k admitting subdivide_face, preferring the smallest
/// minimal vertex id. nullopt if there is none.
std::optional<FaceWalk> find_subdividable_face(const EmbeddedDigraph& d, int k);

struct FamilyStep {
  int step = 0;
  Triangulation triangulation;
  VertexClass face_class = VertexClass::R;  // class whose dimap has the next face
  int t = 0;
  mpz_class tree_number;
  double exponent = 0;  // tree_number^(1/t)
};

/// Repeated k = 4 face subdivision starting from `base`. Each step derives
/// the class carrying a subdividable 4-face (classes tried in R, C, S order),
/// subdivides it and triangulates. Throws Error if no class has such a face.
std::vector<FamilyStep> lower_bound_family(const Triangulation& base, int steps);

}  // namespace dimap
