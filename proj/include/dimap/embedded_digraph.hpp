#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimap {

using VertexId = int;
using ArcId = int;

/// Thrown for malformed inputs and violated operation preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DartDir : std::uint8_t { Out, In };

/// One end of an arc as seen from the vertex it is incident to.
struct Dart {
  ArcId arc = 0;
  DartDir dir = DartDir::Out;

  friend auto operator<=>(const Dart&, const Dart&) = default;
};

struct Arc {
  ArcId id = 0;
  VertexId tail = 0;
  VertexId head = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Violations found by a validator; empty means valid.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// A digraph together with a rotation system: for every vertex the cyclic,
/// counterclockwise order of the darts incident to it. Vertex and arc ids are
/// dense (0..n-1). Construction only checks that ids are in range; the
/// structural invariants of a plane alternating dimap are checked by
/// validate().
class EmbeddedDigraph {
 public:
  EmbeddedDigraph() = default;
  EmbeddedDigraph(int num_vertices, std::vector<Arc> arcs,
                  std::vector<std::vector<Dart>> rotation);

  int num_vertices() const { return num_vertices_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }

  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(ArcId a) const { return arcs_.at(static_cast<std::size_t>(a)); }
  std::span<const Dart> rotation(VertexId v) const {
    return rotation_.at(static_cast<std::size_t>(v));
  }
  const std::vector<std::vector<Dart>>& rotations() const { return rotation_; }

  /// Out-degree of v (equal to the in-degree for Eulerian digraphs).
  int out_degree(VertexId v) const;
  int in_degree(VertexId v) const;
  int degree(VertexId v) const { return out_degree(v); }

  /// Copy with every rotation rotated to start at its smallest dart.
  /// Two digraphs are label-equal iff their normalized forms compare equal.
  EmbeddedDigraph normalized() const;

  friend bool operator==(const EmbeddedDigraph& a, const EmbeddedDigraph& b);

 private:
  int num_vertices_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<int> out_deg_;
  std::vector<int> in_deg_;
};

enum class FaceSide : std::uint8_t { Left, Right };

/// A face of a plane alternating dimap: a directed closed walk.
struct FaceWalk {
  std::vector<ArcId> arcs;
  FaceSide side = FaceSide::Left;

  std::size_t size() const { return arcs.size(); }
  /// Vertices in walk order (tail of each arc).
  std::vector<VertexId> vertices(const EmbeddedDigraph& d) const;
  friend bool operator==(const FaceWalk&, const FaceWalk&) = default;
};

ValidationReport validate(const EmbeddedDigraph& d);

/// True when every rotation alternates out/in darts and every arc has exactly
/// one out dart at its tail and one in dart at its head.
bool is_alternating(const EmbeddedDigraph& d);
bool is_connected(const EmbeddedDigraph& d);

/// Left successor of arc a: the out dart that immediately follows a's in dart
/// in the rotation at head(a). Right successor: the one immediately before.
ArcId left_successor(const EmbeddedDigraph& d, ArcId a);
ArcId right_successor(const EmbeddedDigraph& d, ArcId a);

/// Orbits of the left and right successor permutations. Left faces come
/// first, each walk starting at its smallest arc id, faces ordered by that id.
/// Throws Error if the rotation system is not alternating.
std::vector<FaceWalk> trace_faces(const EmbeddedDigraph& d);

/// Index into trace_faces() of the left and right face of every arc.
struct FaceIncidence {
  std::vector<FaceWalk> faces;
  std::vector<int> left_face;   // indexed by arc
  std::vector<int> right_face;  // indexed by arc
};
FaceIncidence face_incidence(const EmbeddedDigraph& d);

/// V - A + F for the traced faces.
int euler_characteristic(const EmbeddedDigraph& d);

struct UnderlyingGraphChecks {
  bool has_loop = false;
  bool has_cut_vertex = false;
  bool has_2_edge_cut = false;

  bool all_clear() const { return !has_loop && !has_cut_vertex && !has_2_edge_cut; }
  friend bool operator==(const UnderlyingGraphChecks&, const UnderlyingGraphChecks&) = default;
};

/// Loop, articulation and 2-edge-cut checks on the undirected underlying
/// multigraph. The 2-edge-cut search is brute force over all edge pairs.
UnderlyingGraphChecks underlying_graph_checks(const EmbeddedDigraph& d);

/// Mirror image: every rotation reversed.
EmbeddedDigraph mirrored(const EmbeddedDigraph& d);
/// Every arc reversed, rotations kept.
EmbeddedDigraph reversed(const EmbeddedDigraph& d);

/// Label-independent code of the embedded digraph: two digraphs have equal
/// codes iff they are isomorphic as oriented maps (an isomorphism of the
/// digraph that preserves every rotation). Minimum over all BFS relabellings
/// rooted at an out dart.
std::vector<int> canonical_code(const EmbeddedDigraph& d);
bool isomorphic(const EmbeddedDigraph& a, const EmbeddedDigraph& b);

std::string vertex_name(VertexId v);

}  // namespace dimap
