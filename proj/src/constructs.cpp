#include "dimap/constructs.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dimap/intalg.hpp"

namespace dimap {

namespace {

// Rotation of v rotated to start at its first out dart.
std::vector<Dart> from_first_out(std::span<const Dart> rot) {
  std::vector<Dart> r(rot.begin(), rot.end());
  auto it = std::find_if(r.begin(), r.end(), [](const Dart& d) { return d.dir == DartDir::Out; });
  if (it != r.end()) std::rotate(r.begin(), it, r.end());
  return r;
}

void require_valid(const EmbeddedDigraph& d, const char* what) {
  const auto report = validate(d);
  if (!report.ok()) throw Error(std::string(what) + ": " + report.violations.front());
}

}  // namespace

EmbeddedDigraph dipole(int m) {
  if (m < 1) throw Error("dipole needs m >= 1");
  std::vector<Arc> arcs;
  for (int j = 0; j < m; ++j) {
    arcs.push_back({2 * j, 0, 1});
    arcs.push_back({2 * j + 1, 1, 0});
  }
  std::vector<std::vector<Dart>> rot(2);
  for (int a = 0; a < 2 * m; ++a) rot[0].push_back({a, a % 2 == 0 ? DartDir::Out : DartDir::In});
  for (int a = 2 * m - 1; a >= 0; --a) rot[1].push_back({a, a % 2 == 1 ? DartDir::Out : DartDir::In});
  return EmbeddedDigraph(2, std::move(arcs), std::move(rot));
}

EmbeddedDigraph wedge(const EmbeddedDigraph& d1, VertexId v1, const EmbeddedDigraph& d2,
                      VertexId v2) {
  require_valid(d1, "wedge: first digraph");
  require_valid(d2, "wedge: second digraph");
  if (v1 < 0 || v1 >= d1.num_vertices() || v2 < 0 || v2 >= d2.num_vertices())
    throw Error("wedge: unknown vertex");
  const int n1 = d1.num_vertices();
  const int a1 = d1.num_arcs();
  std::vector<VertexId> map2(static_cast<std::size_t>(d2.num_vertices()));
  int next = n1;
  for (VertexId v = 0; v < d2.num_vertices(); ++v) map2[v] = v == v2 ? v1 : next++;

  std::vector<Arc> arcs = d1.arcs();
  for (const Arc& a : d2.arcs()) arcs.push_back({a1 + a.id, map2[a.tail], map2[a.head]});
  std::vector<std::vector<Dart>> rot(static_cast<std::size_t>(next));
  for (VertexId v = 0; v < n1; ++v) rot[v].assign(d1.rotation(v).begin(), d1.rotation(v).end());
  rot[v1] = from_first_out(d1.rotation(v1));
  for (VertexId v = 0; v < d2.num_vertices(); ++v) {
    auto r = v == v2 ? from_first_out(d2.rotation(v))
                     : std::vector<Dart>(d2.rotation(v).begin(), d2.rotation(v).end());
    for (Dart& dart : r) dart.arc += a1;
    auto& target = rot[map2[v]];
    target.insert(target.end(), r.begin(), r.end());
  }
  return EmbeddedDigraph(next, std::move(arcs), std::move(rot));
}

EmbeddedDigraph realization_digraph(const std::vector<int>& orders) {
  if (orders.empty()) throw Error("realization needs at least one order");
  for (int m : orders)
    if (m < 2) throw Error("every order must be at least 2");
  EmbeddedDigraph d = dipole(orders.front());
  VertexId last = 1;
  for (std::size_t i = 1; i < orders.size(); ++i) {
    const int n = d.num_vertices();
    d = wedge(d, last, dipole(orders[i]), 0);
    last = n;  // the new dipole's far vertex
  }
  return d;
}

Triangulation abelian_realization(const std::vector<int>& orders) {
  return triangulate(realization_digraph(orders));
}

EmbeddedDigraph arc_splice(const EmbeddedDigraph& d1, ArcId a1, const EmbeddedDigraph& d2,
                           ArcId a2) {
  require_valid(d1, "arc splice: first digraph");
  require_valid(d2, "arc splice: second digraph");
  if (a1 < 0 || a1 >= d1.num_arcs() || a2 < 0 || a2 >= d2.num_arcs())
    throw Error("arc splice: unknown arc");
  const VertexId u = d1.arc(a1).tail;
  const VertexId u_prime = d1.arc(a1).head;
  const VertexId w = d2.arc(a2).tail;
  const VertexId w_prime = d2.arc(a2).head;
  if (u == u_prime || w == w_prime) throw Error("arc splice: loops cannot be spliced");

  const int n1 = d1.num_vertices();
  std::vector<VertexId> map2(static_cast<std::size_t>(d2.num_vertices()));
  int next_v = n1;
  for (VertexId v = 0; v < d2.num_vertices(); ++v) map2[v] = v == w_prime ? u : next_v++;

  std::vector<ArcId> map1(static_cast<std::size_t>(d1.num_arcs()), -1);
  std::vector<ArcId> map2a(static_cast<std::size_t>(d2.num_arcs()), -1);
  std::vector<Arc> arcs;
  for (const Arc& a : d1.arcs()) {
    if (a.id == a1) continue;
    map1[a.id] = static_cast<ArcId>(arcs.size());
    arcs.push_back({map1[a.id], a.tail, a.head});
  }
  for (const Arc& a : d2.arcs()) {
    if (a.id == a2) continue;
    map2a[a.id] = static_cast<ArcId>(arcs.size());
    arcs.push_back({map2a[a.id], map2[a.tail], map2[a.head]});
  }
  const ArcId fresh = static_cast<ArcId>(arcs.size());
  arcs.push_back({fresh, map2[w], u_prime});

  auto translate = [&](std::span<const Dart> rot, const std::vector<ArcId>& map, ArcId removed) {
    std::vector<Dart> out;
    for (const Dart& dart : rot)
      out.push_back(dart.arc == removed ? Dart{fresh, dart.dir} : Dart{map[dart.arc], dart.dir});
    return out;
  };
  // Darts following `skip` cyclically, excluding it.
  auto after = [](std::span<const Dart> rot, Dart skip) {
    std::vector<Dart> out;
    auto it = std::find(rot.begin(), rot.end(), skip);
    const auto pos = static_cast<std::size_t>(it - rot.begin());
    for (std::size_t k = 1; k < rot.size(); ++k) out.push_back(rot[(pos + k) % rot.size()]);
    return out;
  };

  std::vector<std::vector<Dart>> rot(static_cast<std::size_t>(next_v));
  for (VertexId v = 0; v < n1; ++v)
    if (v != u) rot[v] = translate(d1.rotation(v), map1, a1);
  for (VertexId v = 0; v < d2.num_vertices(); ++v)
    if (v != w_prime) rot[map2[v]] = translate(d2.rotation(v), map2a, a2);
  const auto u_after = after(d1.rotation(u), Dart{a1, DartDir::Out});
  const auto w_after = after(d2.rotation(w_prime), Dart{a2, DartDir::In});
  rot[u] = translate(u_after, map1, a1);
  const auto tail = translate(w_after, map2a, a2);
  rot[u].insert(rot[u].end(), tail.begin(), tail.end());

  EmbeddedDigraph out(next_v, std::move(arcs), std::move(rot));
  require_valid(out, "arc splice produced an invalid embedding");
  return out;
}

std::optional<std::string> subdivision_obstacle(const EmbeddedDigraph& d, const FaceWalk& f) {
  const int k = static_cast<int>(f.size());
  if (k <= 2) return "k > 2 required (face has size " + std::to_string(k) + ")";
  const auto verts = f.vertices(d);
  for (VertexId v : verts)
    if (d.degree(v) != 2)
      return "face vertex " + vertex_name(v) + " has out-degree " + std::to_string(d.degree(v)) +
             ", expected 2";
  if (d.num_vertices() <= k)
    return "need more than k = " + std::to_string(k) + " vertices, digraph has " +
           std::to_string(d.num_vertices());
  if (std::set<VertexId>(verts.begin(), verts.end()).size() != verts.size())
    return "face boundary repeats a vertex";
  return std::nullopt;
}

EmbeddedDigraph subdivide_face(const EmbeddedDigraph& d, const FaceWalk& f) {
  require_valid(d, "subdivide face");
  if (auto why = subdivision_obstacle(d, f)) throw Error(*why);
  const int k = static_cast<int>(f.size());
  const int n = d.num_vertices();
  const int a0 = d.num_arcs();
  const VertexId hub = n;
  const auto verts = f.vertices(d);

  std::vector<Arc> arcs = d.arcs();
  for (int j = 0; j < k; ++j) {
    arcs.push_back({a0 + 2 * j, hub, verts[j]});
    arcs.push_back({a0 + 2 * j + 1, verts[j], hub});
  }
  auto to_vj = [&](int j) { return a0 + 2 * j; };
  auto from_vj = [&](int j) { return a0 + 2 * j + 1; };

  std::vector<std::vector<Dart>> rot(d.rotations());
  rot.emplace_back();
  const bool left = f.side == FaceSide::Left;
  for (int j = 0; j < k; ++j) {
    const ArcId in_arc = f.arcs[(j + k - 1) % k];
    const ArcId out_arc = f.arcs[j];
    auto& r = rot[verts[j]];
    // On a left face out_arc directly follows in_arc; on a right face it
    // directly precedes it. The hub darts go in between.
    const Dart first = left ? Dart{in_arc, DartDir::In} : Dart{out_arc, DartDir::Out};
    auto it = std::find(r.begin(), r.end(), first);
    const std::array<Dart, 2> insert =
        left ? std::array<Dart, 2>{Dart{from_vj(j), DartDir::Out}, Dart{to_vj(j), DartDir::In}}
             : std::array<Dart, 2>{Dart{to_vj(j), DartDir::In}, Dart{from_vj(j), DartDir::Out}};
    r.insert(it + 1, insert.begin(), insert.end());
  }
  auto& hub_rot = rot.back();
  for (int s = 0; s < k; ++s) {
    const int j = left ? (k - s) % k : s;
    if (left) {
      hub_rot.push_back({to_vj(j), DartDir::Out});
      hub_rot.push_back({from_vj(j), DartDir::In});
    } else {
      hub_rot.push_back({from_vj(j), DartDir::In});
      hub_rot.push_back({to_vj(j), DartDir::Out});
    }
  }
  EmbeddedDigraph out(n + 1, std::move(arcs), std::move(rot));
  require_valid(out, "face subdivision produced an invalid embedding");
  return out;
}

mpq_class subdivision_factor(int k) {
  if (k < 1) throw Error("face size must be positive");
  mpq_class sum = 0;
  mpz_class binom = 1;  // C(k-1, j)
  mpz_class pow2 = 1;   // 2^j
  for (int j = 0; j < k; ++j) {
    sum += mpq_class(k * binom, pow2);
    binom = binom * (k - 1 - j) / (j + 1);
    pow2 *= 2;
  }
  sum.canonicalize();
  return sum;
}

std::optional<FaceWalk> find_subdividable_face(const EmbeddedDigraph& d, int k) {
  std::optional<FaceWalk> best;
  VertexId best_min = 0;
  for (const FaceWalk& f : trace_faces(d)) {
    if (static_cast<int>(f.size()) != k || subdivision_obstacle(d, f)) continue;
    const auto verts = f.vertices(d);
    const VertexId m = *std::min_element(verts.begin(), verts.end());
    if (!best || m < best_min) {
      best = f;
      best_min = m;
    }
  }
  return best;
}

namespace {

constexpr int kFamilyFace = 4;

std::optional<VertexClass> class_with_face(const Triangulation& t) {
  for (VertexClass c : kAllClasses)
    if (find_subdividable_face(derive(t, c), kFamilyFace)) return c;
  return std::nullopt;
}

FamilyStep make_step(int step, Triangulation tri, const mpz_class& tree) {
  FamilyStep s;
  s.step = step;
  s.t = tri.t();
  auto cls = class_with_face(tri);
  if (!cls) throw Error("no colour class has a subdividable face of size 4");
  s.face_class = *cls;
  s.triangulation = std::move(tri);
  s.tree_number = tree;
  s.exponent = std::exp(log_mpz(tree) / s.t);
  return s;
}

}  // namespace

std::vector<FamilyStep> lower_bound_family(const Triangulation& base, int steps) {
  if (steps < 0) throw Error("steps must be non-negative");
  std::vector<FamilyStep> out;
  out.push_back(make_step(0, base, tree_number(derive(base, VertexClass::R))));
  for (int s = 1; s <= steps; ++s) {
    const FamilyStep& prev = out.back();
    const EmbeddedDigraph d = derive(prev.triangulation, prev.face_class);
    const auto face = find_subdividable_face(d, kFamilyFace);
    const EmbeddedDigraph next = subdivide_face(d, *face);
    out.push_back(make_step(s, triangulate(next), tree_number(next)));
  }
  return out;
}

}  // namespace dimap
