#include "dimap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>

#include "dimap/intalg.hpp"

namespace dimap {

namespace {

std::vector<std::vector<ArcId>> in_arcs(const EmbeddedDigraph& d) {
  std::vector<std::vector<ArcId>> in(static_cast<std::size_t>(d.num_vertices()));
  for (const Arc& a : d.arcs()) in[a.head].push_back(a.id);
  return in;
}

}  // namespace

mpz_class count_arborescences(const EmbeddedDigraph& d, VertexId root) {
  const int n = d.num_vertices();
  if (root < 0 || root >= n) throw Error("unknown root " + std::to_string(root));
  const auto in = in_arcs(d);
  double space = 1;
  for (VertexId v = 0; v < n; ++v)
    if (v != root) space *= static_cast<double>(in[v].size());
  if (space > kArborescenceGuard)
    throw Error("arborescence enumeration exceeds the guard of 1e7 selections");

  std::vector<VertexId> order;
  for (VertexId v = 0; v < n; ++v)
    if (v != root) order.push_back(v);
  std::vector<VertexId> parent(static_cast<std::size_t>(n), -1);
  std::uint64_t count = 0;

  // A new choice can only close a cycle through the vertex just assigned.
  auto closes_cycle = [&](VertexId v) {
    VertexId x = parent[v];
    for (int steps = 0; steps <= n; ++steps) {
      if (x == v) return true;
      if (x == root || parent[x] < 0) return false;
      x = parent[x];
    }
    return true;
  };

  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == order.size()) {
      ++count;
      return;
    }
    const VertexId v = order[i];
    for (ArcId a : in[v]) {
      parent[v] = d.arc(a).tail;
      if (!closes_cycle(v)) go(i + 1);
    }
    parent[v] = -1;
  };
  go(0);
  return mpz_class(static_cast<unsigned long>(count));
}

std::vector<DirectedCycle> directed_cycles(const EmbeddedDigraph& d, std::optional<VertexId> avoid) {
  const int n = d.num_vertices();
  if (n > kCycleVertexGuard)
    throw Error("cycle enumeration is limited to " + std::to_string(kCycleVertexGuard) +
                " vertices");
  std::vector<std::vector<ArcId>> out_arcs(static_cast<std::size_t>(n));
  for (const Arc& a : d.arcs()) out_arcs[a.tail].push_back(a.id);

  std::vector<DirectedCycle> cycles;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  std::vector<ArcId> path;
  for (VertexId s = 0; s < n; ++s) {
    if (avoid && *avoid == s) continue;
    // Cycles whose smallest vertex is s.
    std::function<void(VertexId)> extend = [&](VertexId v) {
      for (ArcId a : out_arcs[v]) {
        const VertexId w = d.arc(a).head;
        if (w == s) {
          DirectedCycle c;
          c.arcs = path;
          c.arcs.push_back(a);
          for (ArcId x : c.arcs) c.vertices.push_back(d.arc(x).tail);
          cycles.push_back(std::move(c));
        } else if (w > s && !on_path[w] && !(avoid && *avoid == w)) {
          on_path[w] = 1;
          path.push_back(a);
          extend(w);
          path.pop_back();
          on_path[w] = 0;
        }
      }
    };
    on_path[s] = 1;
    extend(s);
    on_path[s] = 0;
  }
  return cycles;
}

mpq_class cycle_probability(const EmbeddedDigraph& d, const std::vector<VertexId>& vertices) {
  mpz_class denom = 1;
  for (VertexId v : std::set<VertexId>(vertices.begin(), vertices.end())) denom *= d.degree(v);
  return mpq_class(1, denom);
}

mpq_class mu(const EmbeddedDigraph& d, VertexId i0) {
  mpq_class sum = 0;
  for (const auto& c : directed_cycles(d, i0)) sum += cycle_probability(d, c.vertices);
  return sum;
}

double JansonBound::value() const { return std::exp(log_value); }
double FaceBound::value() const { return std::exp(log_value); }

JansonBound janson_bound(const EmbeddedDigraph& d, VertexId i0) {
  if (i0 < 0 || i0 >= d.num_vertices()) throw Error("unknown vertex " + std::to_string(i0));
  const auto cycles = directed_cycles(d, i0);
  JansonBound b;
  std::vector<mpq_class> p;
  for (const auto& c : cycles) {
    p.push_back(cycle_probability(d, c.vertices));
    b.mu += p.back();
  }
  // Each cycle fixes the in-arc of each of its vertices.
  std::vector<std::vector<ArcId>> chosen(cycles.size(),
                                         std::vector<ArcId>(static_cast<std::size_t>(d.num_vertices()), -1));
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (ArcId a : cycles[i].arcs) chosen[i][d.arc(a).head] = a;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    mpq_class neighbours = 0;
    for (std::size_t j = 0; j < cycles.size(); ++j) {
      if (i == j) continue;
      bool share = false;
      bool compatible = true;
      std::vector<VertexId> joint = cycles[i].vertices;
      for (VertexId v : cycles[j].vertices) {
        if (chosen[i][v] >= 0) {
          share = true;
          if (chosen[i][v] != chosen[j][v]) compatible = false;
        }
        joint.push_back(v);
      }
      if (!share) continue;
      neighbours += p[j];
      if (compatible) b.big_delta += cycle_probability(d, joint) / 2;
    }
    if (neighbours > b.small_delta) b.small_delta = neighbours;
  }
  b.degree_product = 1;
  double log_prod = 0;
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    if (v == i0) continue;
    b.degree_product *= d.degree(v);
    log_prod += std::log(static_cast<double>(d.degree(v)));
  }
  b.log_value = log_prod - b.mu.get_d();
  return b;
}

bool janson_holds(const JansonBound& b, const mpz_class& tree) {
  if (b.mu == 0) return tree <= b.degree_product;
  if (tree > b.degree_product) return false;
  return log_mpz(tree) <= b.log_value + kBoundSlack;
}

FaceBound face_bound(const EmbeddedDigraph& d) {
  FaceBound b;
  const int n = d.num_vertices();
  int min_deg = 0;
  for (VertexId v = 0; v < n; ++v) min_deg = v == 0 ? d.degree(v) : std::min(min_deg, d.degree(v));
  if (!(min_deg >= 3 || (min_deg == 2 && n >= 4)))
    b.hypothesis_violation = "needs minimum degree >= 3, or minimum degree 2 with at least 4 vertices";
  const auto faces = trace_faces(d);
  for (const FaceWalk& f : faces) {
    const auto verts = f.vertices(d);
    if (std::set<VertexId>(verts.begin(), verts.end()).size() != verts.size()) {
      if (!b.hypothesis_violation) b.hypothesis_violation = "a face is not a simple cycle";
      break;
    }
  }
  double sum = 0;
  for (VertexId v = 0; v < n; ++v) sum += std::log(static_cast<double>(d.degree(v)));
  mpq_class p = 0;
  for (const FaceWalk& f : faces) p += cycle_probability(d, f.vertices(d));
  b.log_value = sum - p.get_d();
  return b;
}

bool face_bound_holds(const FaceBound& b, const mpz_class& tree) {
  return log_mpz(tree) < b.log_value + kBoundSlack;
}

bool is_near_homogeneous(const Triangulation& t) {
  int fours = 0;
  for (VertexId v = 0; v < t.num_vertices; ++v) {
    const int deg = t.degree(v);
    if (deg == 4)
      ++fours;
    else if (deg != 6)
      return false;
  }
  return fours == 6;
}

namespace {

void require_bound_preconditions(const Triangulation& t) {
  const auto report = validate(t);
  if (!report.ok()) throw Error("invalid triangulation: " + report.violations.front());
  if (!is_simple(t)) throw Error("bound evaluation needs a simple underlying graph");
  if (t.t() < 8) throw Error("bound evaluation needs at least eight faces per colour class");
}

}  // namespace

double degree_cycle_bound(const Triangulation& t) {
  require_bound_preconditions(t);
  const auto classes = t.coloured() ? t.classes : three_colour(t);
  std::vector<std::set<VertexId>> neighbours(static_cast<std::size_t>(t.num_vertices));
  for (const TriEdge& e : t.edges) {
    neighbours[e.u].insert(e.v);
    neighbours[e.v].insert(e.u);
  }
  double total = 0;
  for (VertexId v = 0; v < t.num_vertices; ++v) {
    total += std::log(t.degree(v) / 2.0);
    for (VertexClass other : kAllClasses) {
      if (other == classes[v]) continue;
      mpz_class prod = 1;
      for (VertexId j : neighbours[v])
        if (classes[j] == other) prod *= t.degree(j) / 2;
      total -= mpq_class(1, prod).get_d();
    }
  }
  return total;
}

TriangulationBoundReport triangulation_bound_report(const Triangulation& t) {
  require_bound_preconditions(t);
  TriangulationBoundReport r;
  r.tree_number = tree_number(derive(t, VertexClass::R));
  r.n = t.num_vertices;
  r.log3_tree = 3 * log_mpz(r.tree_number);
  r.degree_cycle_bound = degree_cycle_bound(t);
  r.degree_cycle_check = r.log3_tree <= r.degree_cycle_bound + kBoundSlack;
  r.vertex_bound_rhs = 0.6 * std::log(6.0) * r.n;
  r.vertex_bound_check = r.log3_tree < r.vertex_bound_rhs + kBoundSlack;
  r.near_homogeneous = is_near_homogeneous(t);
  if (r.near_homogeneous) {
    r.near_homogeneous_rhs = 6 * std::log(2.0) - 4.0 / 3 + (std::log(3.0) - 2.0 / 27) * (r.n - 6);
    r.near_homogeneous_check = r.log3_tree < *r.near_homogeneous_rhs + kBoundSlack;
  }
  return r;
}

}  // namespace dimap
