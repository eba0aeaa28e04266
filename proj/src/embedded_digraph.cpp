#include "dimap/embedded_digraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace dimap {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// Connectivity of the underlying graph restricted to the vertices with
// keep_vertex set, ignoring arcs with skip_arc set.
bool connected_subgraph(const EmbeddedDigraph& d, const std::vector<char>& keep_vertex,
                        const std::vector<char>& skip_arc) {
  const int n = d.num_vertices();
  UnionFind uf(n);
  int components = 0;
  for (int v = 0; v < n; ++v) components += keep_vertex[v] ? 1 : 0;
  for (const Arc& a : d.arcs()) {
    if (skip_arc[a.id] || !keep_vertex[a.tail] || !keep_vertex[a.head]) continue;
    if (uf.unite(a.tail, a.head)) --components;
  }
  return components <= 1;
}

// Position of the out and in dart of every arc in its incident rotation.
struct DartPositions {
  std::vector<int> out_pos;
  std::vector<int> in_pos;

  explicit DartPositions(const EmbeddedDigraph& d)
      : out_pos(static_cast<std::size_t>(d.num_arcs()), -1),
        in_pos(static_cast<std::size_t>(d.num_arcs()), -1) {
    for (VertexId v = 0; v < d.num_vertices(); ++v) {
      auto rot = d.rotation(v);
      for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
        auto& slot = rot[i].dir == DartDir::Out ? out_pos[rot[i].arc] : in_pos[rot[i].arc];
        slot = i;
      }
    }
  }
};

ArcId successor(const EmbeddedDigraph& d, const DartPositions& pos, ArcId a, int step) {
  const VertexId v = d.arc(a).head;
  auto rot = d.rotation(v);
  const int len = static_cast<int>(rot.size());
  const Dart next = rot[static_cast<std::size_t>((pos.in_pos[a] + step + len) % len)];
  if (next.dir != DartDir::Out) throw Error("rotation at " + vertex_name(v) + " is not alternating");
  return next.arc;
}

}  // namespace

std::string vertex_name(VertexId v) { return "v" + std::to_string(v); }

EmbeddedDigraph::EmbeddedDigraph(int num_vertices, std::vector<Arc> arcs,
                                 std::vector<std::vector<Dart>> rotation)
    : num_vertices_(num_vertices), arcs_(std::move(arcs)), rotation_(std::move(rotation)) {
  if (num_vertices_ < 0) throw Error("negative vertex count");
  if (static_cast<int>(rotation_.size()) != num_vertices_)
    throw Error("rotation must list exactly one cyclic sequence per vertex");
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (a.id != static_cast<ArcId>(i)) throw Error("arc ids must be dense and in order");
    if (a.tail < 0 || a.tail >= num_vertices_ || a.head < 0 || a.head >= num_vertices_)
      throw Error("arc a" + std::to_string(a.id) + " references an unknown vertex");
  }
  for (const auto& rot : rotation_)
    for (const Dart& dart : rot)
      if (dart.arc < 0 || dart.arc >= num_arcs())
        throw Error("rotation references unknown arc " + std::to_string(dart.arc));
  out_deg_.assign(static_cast<std::size_t>(num_vertices_), 0);
  in_deg_.assign(static_cast<std::size_t>(num_vertices_), 0);
  for (const Arc& a : arcs_) {
    ++out_deg_[a.tail];
    ++in_deg_[a.head];
  }
}

int EmbeddedDigraph::out_degree(VertexId v) const {
  return out_deg_.at(static_cast<std::size_t>(v));
}

int EmbeddedDigraph::in_degree(VertexId v) const {
  return in_deg_.at(static_cast<std::size_t>(v));
}

EmbeddedDigraph EmbeddedDigraph::normalized() const {
  auto rot = rotation_;
  for (auto& r : rot)
    if (!r.empty()) std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
  return EmbeddedDigraph(num_vertices_, arcs_, std::move(rot));
}

bool operator==(const EmbeddedDigraph& a, const EmbeddedDigraph& b) {
  if (a.num_vertices_ != b.num_vertices_ || a.arcs_ != b.arcs_) return false;
  return a.normalized().rotation_ == b.normalized().rotation_;
}

std::vector<VertexId> FaceWalk::vertices(const EmbeddedDigraph& d) const {
  std::vector<VertexId> out;
  out.reserve(arcs.size());
  for (ArcId a : arcs) out.push_back(d.arc(a).tail);
  return out;
}

bool is_alternating(const EmbeddedDigraph& d) {
  std::vector<int> outs(static_cast<std::size_t>(d.num_arcs())), ins(outs.size());
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    auto rot = d.rotation(v);
    if (rot.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const Dart& dart = rot[i];
      if (rot[(i + 1) % rot.size()].dir == dart.dir) return false;
      const Arc& a = d.arc(dart.arc);
      if (dart.dir == DartDir::Out) {
        if (a.tail != v) return false;
        ++outs[dart.arc];
      } else {
        if (a.head != v) return false;
        ++ins[dart.arc];
      }
    }
  }
  for (std::size_t a = 0; a < outs.size(); ++a)
    if (outs[a] != 1 || ins[a] != 1) return false;
  return true;
}

bool is_connected(const EmbeddedDigraph& d) {
  if (d.num_vertices() == 0) return false;
  return connected_subgraph(d, std::vector<char>(static_cast<std::size_t>(d.num_vertices()), 1),
                            std::vector<char>(static_cast<std::size_t>(d.num_arcs()), 0));
}

ValidationReport validate(const EmbeddedDigraph& d) {
  ValidationReport report;
  auto& out = report.violations;
  if (d.num_vertices() == 0) {
    out.push_back("digraph has no vertices");
    return report;
  }
  if (d.num_arcs() < 2) out.push_back("fewer than two arcs (degenerate sphere)");

  std::vector<int> outs(static_cast<std::size_t>(d.num_arcs())), ins(outs.size());
  bool incidence_ok = true;
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    for (const Dart& dart : d.rotation(v)) {
      const Arc& a = d.arc(dart.arc);
      const bool out_dart = dart.dir == DartDir::Out;
      if ((out_dart ? a.tail : a.head) != v) {
        out.push_back("arc a" + std::to_string(a.id) + " has an " + (out_dart ? "out" : "in") +
                      " dart at " + vertex_name(v) + " which is not its " +
                      (out_dart ? "tail" : "head"));
        incidence_ok = false;
      }
      ++(out_dart ? outs : ins)[dart.arc];
    }
  }
  for (ArcId a = 0; a < d.num_arcs(); ++a) {
    if (outs[a] != 1) {
      out.push_back("arc a" + std::to_string(a) + " has " + std::to_string(outs[a]) +
                    " out darts (expected 1)");
      incidence_ok = false;
    }
    if (ins[a] != 1) {
      out.push_back("arc a" + std::to_string(a) + " has " + std::to_string(ins[a]) +
                    " in darts (expected 1)");
      incidence_ok = false;
    }
  }

  bool alternation_ok = true;
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    auto rot = d.rotation(v);
    bool ok = rot.size() % 2 == 0;
    for (std::size_t i = 0; ok && i < rot.size(); ++i)
      ok = rot[i].dir != rot[(i + 1) % rot.size()].dir;
    if (!ok) {
      out.push_back("alternation violated at vertex " + vertex_name(v));
      alternation_ok = false;
    }
  }

  const bool connected = is_connected(d);
  if (!connected) out.push_back("underlying graph is disconnected");

  if (incidence_ok && alternation_ok && connected) {
    const int chi = euler_characteristic(d);
    if (chi != 2)
      out.push_back("Euler formula fails: V - A + F = " + std::to_string(chi) + ", expected 2");
  }
  return report;
}

ArcId left_successor(const EmbeddedDigraph& d, ArcId a) {
  return successor(d, DartPositions(d), a, +1);
}

ArcId right_successor(const EmbeddedDigraph& d, ArcId a) {
  return successor(d, DartPositions(d), a, -1);
}

FaceIncidence face_incidence(const EmbeddedDigraph& d) {
  if (!is_alternating(d)) throw Error("face tracing requires an alternating rotation system");
  const DartPositions pos(d);
  const auto n_arcs = static_cast<std::size_t>(d.num_arcs());
  FaceIncidence inc;
  inc.left_face.assign(n_arcs, -1);
  inc.right_face.assign(n_arcs, -1);
  for (FaceSide side : {FaceSide::Left, FaceSide::Right}) {
    auto& owner = side == FaceSide::Left ? inc.left_face : inc.right_face;
    const int step = side == FaceSide::Left ? +1 : -1;
    for (ArcId start = 0; start < d.num_arcs(); ++start) {
      if (owner[start] != -1) continue;
      FaceWalk walk;
      walk.side = side;
      const int index = static_cast<int>(inc.faces.size());
      ArcId a = start;
      do {
        owner[a] = index;
        walk.arcs.push_back(a);
        a = successor(d, pos, a, step);
      } while (a != start);
      inc.faces.push_back(std::move(walk));
    }
  }
  return inc;
}

std::vector<FaceWalk> trace_faces(const EmbeddedDigraph& d) { return face_incidence(d).faces; }

int euler_characteristic(const EmbeddedDigraph& d) {
  return d.num_vertices() - d.num_arcs() + static_cast<int>(trace_faces(d).size());
}

UnderlyingGraphChecks underlying_graph_checks(const EmbeddedDigraph& d) {
  UnderlyingGraphChecks checks;
  const auto n = static_cast<std::size_t>(d.num_vertices());
  const auto m = static_cast<std::size_t>(d.num_arcs());
  for (const Arc& a : d.arcs()) checks.has_loop = checks.has_loop || a.tail == a.head;

  std::vector<char> keep(n, 1);
  const std::vector<char> no_skip(m, 0);
  if (n > 2) {
    for (std::size_t v = 0; v < n && !checks.has_cut_vertex; ++v) {
      keep[v] = 0;
      checks.has_cut_vertex = !connected_subgraph(d, keep, no_skip);
      keep[v] = 1;
    }
  }

  std::vector<char> skip(m, 0);
  for (std::size_t i = 0; i < m && !checks.has_2_edge_cut; ++i) {
    skip[i] = 1;
    for (std::size_t j = i + 1; j < m && !checks.has_2_edge_cut; ++j) {
      skip[j] = 1;
      checks.has_2_edge_cut = !connected_subgraph(d, keep, skip);
      skip[j] = 0;
    }
    skip[i] = 0;
  }
  return checks;
}

EmbeddedDigraph mirrored(const EmbeddedDigraph& d) {
  auto rot = d.rotations();
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return EmbeddedDigraph(d.num_vertices(), d.arcs(), std::move(rot));
}

EmbeddedDigraph reversed(const EmbeddedDigraph& d) {
  auto arcs = d.arcs();
  for (Arc& a : arcs) std::swap(a.tail, a.head);
  auto rot = d.rotations();
  for (auto& r : rot)
    for (Dart& dart : r) dart.dir = dart.dir == DartDir::Out ? DartDir::In : DartDir::Out;
  return EmbeddedDigraph(d.num_vertices(), std::move(arcs), std::move(rot));
}

namespace {

std::vector<int> bfs_code(const EmbeddedDigraph& d, const DartPositions& pos, VertexId root,
                          int root_pos) {
  std::vector<int> vlabel(static_cast<std::size_t>(d.num_vertices()), -1);
  std::vector<int> alabel(static_cast<std::size_t>(d.num_arcs()), -1);
  std::vector<int> start(vlabel.size(), 0);
  std::vector<int> code{d.num_vertices(), d.num_arcs()};
  int next_v = 0;
  int next_a = 0;
  std::queue<VertexId> queue;
  vlabel[root] = next_v++;
  start[root] = root_pos;
  queue.push(root);
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    auto rot = d.rotation(v);
    const int len = static_cast<int>(rot.size());
    code.push_back(len);
    for (int k = 0; k < len; ++k) {
      const Dart dart = rot[static_cast<std::size_t>((start[v] + k) % len)];
      if (alabel[dart.arc] < 0) alabel[dart.arc] = next_a++;
      const Arc& a = d.arc(dart.arc);
      const bool out = dart.dir == DartDir::Out;
      const VertexId other = out ? a.head : a.tail;
      if (vlabel[other] < 0) {
        vlabel[other] = next_v++;
        start[other] = out ? pos.in_pos[dart.arc] : pos.out_pos[dart.arc];
        queue.push(other);
      }
      code.push_back(out ? 0 : 1);
      code.push_back(alabel[dart.arc]);
      code.push_back(vlabel[other]);
    }
  }
  // Unreached vertices (disconnected input) still contribute their degree.
  for (VertexId v = 0; v < d.num_vertices(); ++v)
    if (vlabel[v] < 0) code.push_back(-static_cast<int>(d.rotation(v).size()));
  return code;
}

}  // namespace

std::vector<int> canonical_code(const EmbeddedDigraph& d) {
  if (!is_alternating(d)) throw Error("canonical code requires an alternating rotation system");
  const DartPositions pos(d);
  std::vector<int> best;
  bool have = false;
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    auto rot = d.rotation(v);
    for (int p = 0; p < static_cast<int>(rot.size()); ++p) {
      if (rot[p].dir != DartDir::Out) continue;
      auto code = bfs_code(d, pos, v, p);
      if (!have || code < best) {
        best = std::move(code);
        have = true;
      }
    }
  }
  if (!have) best = {d.num_vertices(), d.num_arcs()};
  return best;
}

bool isomorphic(const EmbeddedDigraph& a, const EmbeddedDigraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_arcs() != b.num_arcs()) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace dimap
