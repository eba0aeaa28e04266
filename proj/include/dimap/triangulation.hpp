#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dimap/embedded_digraph.hpp"
#include "dimap/intalg.hpp"

namespace dimap {

enum class VertexClass : std::uint8_t { R, C, S };
enum class FaceColour : std::uint8_t { White, Black };

inline constexpr std::array<VertexClass, 3> kAllClasses{VertexClass::R, VertexClass::C,
                                                        VertexClass::S};

char class_letter(VertexClass c);
std::string colour_name(FaceColour c);

struct TriEdge {
  int id = 0;
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const TriEdge&, const TriEdge&) = default;
};

/// Boundary step of an oriented face: `edge` leaves `vertex` towards the next
/// corner.
struct Corner {
  int edge = 0;
  VertexId vertex = 0;

  friend bool operator==(const Corner&, const Corner&) = default;
};

struct TriFace {
  int id = 0;
  FaceColour colour = FaceColour::Black;
  std::array<Corner, 3> boundary{};

  friend bool operator==(const TriFace&, const TriFace&) = default;
};

/// A face 2-coloured spherical triangulation. Faces are oriented
/// consistently (counterclockwise seen from outside), so every edge is
/// traversed once in each direction. rotation[v] lists the edges at v in
/// counterclockwise order. `classes` is empty for an uncoloured triangulation.
struct Triangulation {
  int num_vertices = 0;
  std::vector<VertexClass> classes;
  std::vector<std::string> labels;
  std::vector<TriEdge> edges;
  std::vector<TriFace> faces;
  std::vector<std::vector<int>> rotation;

  int num_faces(FaceColour c) const;
  /// Faces per colour class.
  int t() const { return num_faces(FaceColour::Black); }
  int degree(VertexId v) const { return static_cast<int>(rotation.at(v).size()); }
  bool coloured() const { return !classes.empty(); }
  std::string label(VertexId v) const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

/// Counterclockwise edge rotation implied by oriented faces: at the corner
/// where a face enters v along e_in and leaves along e_out, e_in follows
/// e_out. Throws Error if some vertex's corners do not close into one cycle.
std::vector<std::vector<int>> rotation_from_faces(int num_vertices,
                                                  const std::vector<TriEdge>& edges,
                                                  const std::vector<TriFace>& faces);

ValidationReport validate(const Triangulation& t);

/// Proper vertex 3-colouring by propagation from the lowest face id, whose
/// boundary vertices receive R, C, S in order. Throws Error on conflict.
std::vector<VertexClass> three_colour(const Triangulation& t);

/// No loops and no parallel edges.
bool is_simple(const Triangulation& t);

/// Vertices of class I in increasing id order; vertex k of derive(t, I) is
/// the k-th of these.
std::vector<VertexId> class_vertices(const Triangulation& t, VertexClass i);

/// The plane alternating dimap on class I: one arc per black face, in face
/// id order, from the face's I-vertex to the I-vertex of the white face
/// across the opposite edge. Uses t.classes, or three_colour() if uncoloured.
EmbeddedDigraph derive(const Triangulation& t, VertexClass i);

/// Inverse of derive: a new vertex in every face of D. Original vertices keep
/// their ids and form class R; left faces then right faces (trace order) form
/// classes C and S. Black face a and white face t + a sit on either side of arc
/// a, and edge a crosses arc a.
Triangulation triangulate(const EmbeddedDigraph& d);

struct TrinityReport {
  std::array<mpz_class, 3> tree_numbers;
  std::array<AbelianGroupShape, 3> groups;

  bool consistent() const;
};

TrinityReport trinity_report(const Triangulation& t);
/// Common sandpile group of the three derived dimaps. Throws std::logic_error
/// if they disagree.
AbelianGroupShape canonical_group(const Triangulation& t);

}  // namespace dimap
