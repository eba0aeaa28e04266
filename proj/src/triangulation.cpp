#include "dimap/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace dimap {

char class_letter(VertexClass c) {
  switch (c) {
    case VertexClass::R:
      return 'R';
    case VertexClass::C:
      return 'C';
    case VertexClass::S:
      return 'S';
  }
  return '?';
}

std::string colour_name(FaceColour c) { return c == FaceColour::Black ? "black" : "white"; }

int Triangulation::num_faces(FaceColour c) const {
  return static_cast<int>(
      std::count_if(faces.begin(), faces.end(), [c](const TriFace& f) { return f.colour == c; }));
}

std::string Triangulation::label(VertexId v) const {
  if (static_cast<std::size_t>(v) < labels.size() && !labels[v].empty()) return labels[v];
  return vertex_name(v);
}

std::vector<std::vector<int>> rotation_from_faces(int num_vertices,
                                                  const std::vector<TriEdge>& edges,
                                                  const std::vector<TriFace>& faces) {
  (void)edges;
  std::vector<std::map<int, int>> next(static_cast<std::size_t>(num_vertices));
  for (const TriFace& f : faces) {
    for (int k = 0; k < 3; ++k) {
      const Corner& in = f.boundary[k];
      const Corner& out = f.boundary[(k + 1) % 3];
      if (!next.at(out.vertex).emplace(out.edge, in.edge).second)
        throw Error("edge e" + std::to_string(out.edge) + " leaves " + vertex_name(out.vertex) +
                    " in more than one face");
    }
  }
  std::vector<std::vector<int>> rotation(static_cast<std::size_t>(num_vertices));
  for (int v = 0; v < num_vertices; ++v) {
    const auto& nv = next[v];
    if (nv.empty()) throw Error(vertex_name(v) + " lies on no face");
    std::vector<int>& cyc = rotation[v];
    const int start = nv.begin()->first;
    int e = start;
    do {
      cyc.push_back(e);
      auto it = nv.find(e);
      if (it == nv.end())
        throw Error("faces around " + vertex_name(v) + " do not close up");
      e = it->second;
    } while (e != start && cyc.size() <= nv.size());
    if (cyc.size() != nv.size() || e != start)
      throw Error("faces around " + vertex_name(v) + " do not form a single disc");
  }
  return rotation;
}

namespace {

bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto it = std::find(b.begin(), b.end(), a.front());
  if (it == b.end()) return false;
  std::vector<int> rb(it, b.end());
  rb.insert(rb.end(), b.begin(), it);
  return rb == a;
}

// Index of the face that traverses edge e starting from its end u (slot 0)
// or from its end v (slot 1).
int side_slot(const TriEdge& e, VertexId from) { return from == e.u ? 0 : 1; }

struct EdgeSides {
  std::vector<std::array<int, 2>> face;  // [edge][slot]

  explicit EdgeSides(const Triangulation& t)
      : face(t.edges.size(), std::array<int, 2>{-1, -1}) {
    for (const TriFace& f : t.faces)
      for (const Corner& c : f.boundary) face[c.edge][side_slot(t.edges[c.edge], c.vertex)] = f.id;
  }
};

std::vector<VertexClass> classes_or_colour(const Triangulation& t) {
  return t.coloured() ? t.classes : three_colour(t);
}

}  // namespace

ValidationReport validate(const Triangulation& t) {
  ValidationReport report;
  auto& out = report.violations;
  const int n = t.num_vertices;
  if (n <= 0) {
    out.push_back("triangulation has no vertices");
    return report;
  }
  if (!t.classes.empty() && static_cast<int>(t.classes.size()) != n)
    out.push_back("colour list length differs from vertex count");
  if (!t.labels.empty() && static_cast<int>(t.labels.size()) != n)
    out.push_back("label list length differs from vertex count");

  bool structure_ok = true;
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const TriEdge& e = t.edges[i];
    if (e.id != static_cast<int>(i)) {
      out.push_back("edge ids must be dense and in order");
      structure_ok = false;
    } else if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      out.push_back("edge e" + std::to_string(e.id) + " references an unknown vertex");
      structure_ok = false;
    } else if (e.u == e.v) {
      out.push_back("edge e" + std::to_string(e.id) + " is a loop");
      structure_ok = false;
    }
  }
  if (!structure_ok) return report;

  const int n_edges = static_cast<int>(t.edges.size());
  std::vector<std::array<int, 2>> uses(t.edges.size(), std::array<int, 2>{0, 0});
  std::vector<std::array<int, 2>> colour_at(t.edges.size(), std::array<int, 2>{-1, -1});
  for (std::size_t i = 0; i < t.faces.size(); ++i) {
    const TriFace& f = t.faces[i];
    if (f.id != static_cast<int>(i)) {
      out.push_back("face ids must be dense and in order");
      structure_ok = false;
      continue;
    }
    const std::string name = "face f" + std::to_string(f.id);
    for (int k = 0; k < 3; ++k) {
      const Corner& c = f.boundary[k];
      const VertexId next = f.boundary[(k + 1) % 3].vertex;
      if (c.edge < 0 || c.edge >= n_edges || c.vertex < 0 || c.vertex >= n || next < 0 ||
          next >= n) {
        out.push_back(name + " references an unknown edge or vertex");
        structure_ok = false;
        break;
      }
      const TriEdge& e = t.edges[c.edge];
      if (!((e.u == c.vertex && e.v == next) || (e.v == c.vertex && e.u == next))) {
        out.push_back(name + " uses edge e" + std::to_string(c.edge) + " between the wrong vertices");
        structure_ok = false;
        continue;
      }
      const int slot = side_slot(e, c.vertex);
      ++uses[c.edge][slot];
      colour_at[c.edge][slot] = static_cast<int>(f.colour);
    }
    const auto& b = f.boundary;
    if (b[0].vertex == b[1].vertex || b[1].vertex == b[2].vertex || b[0].vertex == b[2].vertex) {
      out.push_back(name + " has a repeated vertex");
      structure_ok = false;
    }
  }
  if (!structure_ok) return report;

  for (int e = 0; e < n_edges; ++e) {
    if (uses[e][0] != 1 || uses[e][1] != 1) {
      out.push_back("edge e" + std::to_string(e) +
                    " must be traversed once in each direction by the faces");
      structure_ok = false;
    } else if (colour_at[e][0] == colour_at[e][1]) {
      out.push_back("faces on both sides of edge e" + std::to_string(e) + " have the same colour");
    }
  }
  const int black = t.num_faces(FaceColour::Black);
  const int white = t.num_faces(FaceColour::White);
  if (black != white)
    out.push_back("black and white face counts differ (" + std::to_string(black) + " vs " +
                  std::to_string(white) + ")");
  if (black < 2) out.push_back("fewer than two faces per colour class");
  if (!structure_ok) return report;

  try {
    const auto rot = rotation_from_faces(n, t.edges, t.faces);
    if (static_cast<int>(t.rotation.size()) != n) {
      out.push_back("rotation must list one cyclic sequence per vertex");
    } else {
      for (int v = 0; v < n; ++v)
        if (!same_cycle(rot[v], t.rotation[v]))
          out.push_back("rotation at " + vertex_name(v) + " disagrees with the face orientation");
    }
  } catch (const Error& e) {
    out.push_back(e.what());
  }

  const int chi = n - n_edges + static_cast<int>(t.faces.size());
  if (chi != 2)
    out.push_back("Euler formula fails: V - E + F = " + std::to_string(chi) + ", expected 2");

  std::vector<int> comp(static_cast<std::size_t>(n));
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  int components = n;
  for (const TriEdge& e : t.edges) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      comp[a] = b;
      --components;
    }
  }
  if (components != 1) out.push_back("underlying graph is disconnected");

  if (static_cast<int>(t.classes.size()) == n) {
    for (const TriFace& f : t.faces) {
      std::set<VertexClass> seen;
      for (const Corner& c : f.boundary) seen.insert(t.classes[c.vertex]);
      if (seen.size() != 3)
        out.push_back("face f" + std::to_string(f.id) + " does not see all three colour classes");
    }
  }
  return report;
}

std::vector<VertexClass> three_colour(const Triangulation& t) {
  if (t.faces.empty()) throw Error("triangulation has no faces");
  const int n = t.num_vertices;
  const EdgeSides sides(t);
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::vector<char> done(t.faces.size(), 0);

  auto assign = [&](VertexId v, int c) {
    if (colour[v] == -1) {
      colour[v] = c;
    } else if (colour[v] != c) {
      throw Error("vertex colouring conflict at " + vertex_name(v) +
                  ": not a face 2-coloured spherical triangulation");
    }
  };

  const TriFace& seed = t.faces.front();
  for (int k = 0; k < 3; ++k) assign(seed.boundary[k].vertex, k);
  std::queue<int> queue;
  queue.push(seed.id);
  done[seed.id] = 1;
  while (!queue.empty()) {
    const TriFace& f = t.faces[queue.front()];
    queue.pop();
    std::set<int> used;
    for (const Corner& c : f.boundary) used.insert(colour[c.vertex]);
    if (used.size() != 3)
      throw Error("face f" + std::to_string(f.id) + " cannot receive three distinct colours");
    for (const Corner& c : f.boundary) {
      const TriEdge& e = t.edges.at(c.edge);
      const int other = sides.face[c.edge][1 - side_slot(e, c.vertex)];
      if (other < 0) throw Error("edge e" + std::to_string(c.edge) + " borders only one face");
      const TriFace& g = t.faces[other];
      if (g.colour == f.colour)
        throw Error("faces f" + std::to_string(f.id) + " and f" + std::to_string(g.id) +
                    " share an edge and a colour");
      // The vertex of g off the shared edge takes the colour missing from it.
      const int missing = 3 - colour[e.u] - colour[e.v];
      for (const Corner& gc : g.boundary)
        if (gc.vertex != e.u && gc.vertex != e.v) assign(gc.vertex, missing);
      if (!done[other]) {
        done[other] = 1;
        queue.push(other);
      }
    }
  }
  std::vector<VertexClass> out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (colour[v] < 0) throw Error(vertex_name(v) + " is not reached from the seed face");
    out[v] = static_cast<VertexClass>(colour[v]);
  }
  return out;
}

bool is_simple(const Triangulation& t) {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const TriEdge& e : t.edges) {
    if (e.u == e.v) return false;
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) return false;
  }
  return true;
}

std::vector<VertexId> class_vertices(const Triangulation& t, VertexClass i) {
  const auto classes = classes_or_colour(t);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < t.num_vertices; ++v)
    if (classes[v] == i) out.push_back(v);
  return out;
}

EmbeddedDigraph derive(const Triangulation& t, VertexClass i) {
  const auto report = validate(t);
  if (!report.ok()) throw Error("invalid triangulation: " + report.violations.front());
  const auto classes = classes_or_colour(t);
  const EdgeSides sides(t);

  std::vector<int> new_id(static_cast<std::size_t>(t.num_vertices), -1);
  int n = 0;
  for (VertexId v = 0; v < t.num_vertices; ++v)
    if (classes[v] == i) new_id[v] = n++;

  auto class_corner = [&](const TriFace& f) {
    for (int k = 0; k < 3; ++k)
      if (classes[f.boundary[k].vertex] == i) return k;
    throw Error("face f" + std::to_string(f.id) + " has no vertex of the requested class");
  };

  std::vector<int> arc_of_black(t.faces.size(), -1);
  std::vector<int> arc_into_white(t.faces.size(), -1);
  std::vector<Arc> arcs;
  for (const TriFace& f : t.faces) {
    if (f.colour != FaceColour::Black) continue;
    const int k = class_corner(f);
    const Corner& opposite = f.boundary[(k + 1) % 3];
    const TriEdge& e = t.edges[opposite.edge];
    const int white = sides.face[opposite.edge][1 - side_slot(e, opposite.vertex)];
    const TriFace& w = t.faces[white];
    const ArcId id = static_cast<ArcId>(arcs.size());
    arcs.push_back({id, new_id[f.boundary[k].vertex], new_id[w.boundary[class_corner(w)].vertex]});
    arc_of_black[f.id] = id;
    arc_into_white[w.id] = id;
  }

  // Corner of face f at v, keyed by the edge along which f leaves v.
  std::map<std::pair<VertexId, int>, int> corner_face;
  for (const TriFace& f : t.faces)
    for (const Corner& c : f.boundary) corner_face[{c.vertex, c.edge}] = f.id;

  std::vector<std::vector<Dart>> rotation(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < t.num_vertices; ++v) {
    if (new_id[v] < 0) continue;
    auto& rot = rotation[new_id[v]];
    for (int e : t.rotation[v]) {
      const TriFace& f = t.faces[corner_face.at({v, e})];
      if (f.colour == FaceColour::Black)
        rot.push_back({arc_of_black[f.id], DartDir::Out});
      else
        rot.push_back({arc_into_white[f.id], DartDir::In});
    }
  }
  return EmbeddedDigraph(n, std::move(arcs), std::move(rotation));
}

Triangulation triangulate(const EmbeddedDigraph& d) {
  const auto report = validate(d);
  if (!report.ok()) throw Error("invalid digraph: " + report.violations.front());
  const FaceIncidence inc = face_incidence(d);
  const int n = d.num_vertices();
  const int n_arcs = d.num_arcs();
  const int n_faces = static_cast<int>(inc.faces.size());

  Triangulation t;
  t.num_vertices = n + n_faces;
  t.classes.assign(static_cast<std::size_t>(n), VertexClass::R);
  std::array<int, 3> count{n, 0, 0};
  for (int v = 0; v < n; ++v) t.labels.push_back("r" + std::to_string(v));
  for (const FaceWalk& f : inc.faces) {
    const bool left = f.side == FaceSide::Left;
    const VertexClass cls = left ? VertexClass::C : VertexClass::S;
    t.classes.push_back(cls);
    t.labels.push_back((left ? "c" : "s") + std::to_string(count[left ? 1 : 2]++));
  }
  auto face_vertex = [n](int face_index) { return n + face_index; };

  for (ArcId a = 0; a < n_arcs; ++a)
    t.edges.push_back({a, face_vertex(inc.left_face[a]), face_vertex(inc.right_face[a])});

  // Corner edges: one per pair of consecutive darts at each original vertex.
  std::vector<int> edge_after_out(static_cast<std::size_t>(n_arcs));
  std::vector<int> edge_before_out(edge_after_out.size());
  std::vector<int> edge_after_in(edge_after_out.size());
  std::vector<int> edge_before_in(edge_after_out.size());
  for (VertexId x = 0; x < n; ++x) {
    auto rot = d.rotation(x);
    const std::size_t len = rot.size();
    for (std::size_t j = 0; j < len; ++j) {
      const Dart here = rot[j];
      const Dart next = rot[(j + 1) % len];
      const int face = here.dir == DartDir::In ? inc.left_face[next.arc] : inc.right_face[here.arc];
      const int id = static_cast<int>(t.edges.size());
      t.edges.push_back({id, x, face_vertex(face)});
      (here.dir == DartDir::Out ? edge_after_out : edge_after_in)[here.arc] = id;
      (next.dir == DartDir::Out ? edge_before_out : edge_before_in)[next.arc] = id;
    }
  }

  for (ArcId a = 0; a < n_arcs; ++a) {
    const VertexId x = d.arc(a).tail;
    const VertexId p = face_vertex(inc.left_face[a]);
    const VertexId q = face_vertex(inc.right_face[a]);
    t.faces.push_back({a, FaceColour::Black, {{{edge_before_out[a], x}, {a, p}, {edge_after_out[a], q}}}});
  }
  for (ArcId a = 0; a < n_arcs; ++a) {
    const VertexId y = d.arc(a).head;
    const VertexId p = face_vertex(inc.left_face[a]);
    const VertexId q = face_vertex(inc.right_face[a]);
    t.faces.push_back(
        {n_arcs + a, FaceColour::White, {{{edge_before_in[a], y}, {a, q}, {edge_after_in[a], p}}}});
  }
  t.rotation = rotation_from_faces(t.num_vertices, t.edges, t.faces);
  return t;
}

bool TrinityReport::consistent() const {
  return tree_numbers[0] == tree_numbers[1] && tree_numbers[1] == tree_numbers[2] &&
         groups[0] == groups[1] && groups[1] == groups[2];
}

TrinityReport trinity_report(const Triangulation& t) {
  TrinityReport r;
  for (std::size_t k = 0; k < 3; ++k) {
    const EmbeddedDigraph d = derive(t, kAllClasses[k]);
    r.tree_numbers[k] = tree_number(d);
    r.groups[k] = sandpile_group(d, 0);
  }
  return r;
}

AbelianGroupShape canonical_group(const Triangulation& t) {
  const TrinityReport r = trinity_report(t);
  if (!r.consistent())
    throw std::logic_error("derived dimaps disagree: tree numbers " + r.tree_numbers[0].get_str() +
                           ", " + r.tree_numbers[1].get_str() + ", " +
                           r.tree_numbers[2].get_str());
  return r.groups[0];
}

}  // namespace dimap
