#include <algorithm>
#include <map>

#include "corpus.hpp"
#include "dimap/constructs.hpp"
#include "dimap/embedded_digraph.hpp"
#include "dimap/io.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace dimap;

namespace {

bool mentions(const ValidationReport& r, const std::string& needle) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const std::string& v) { return v.find(needle) != std::string::npos; });
}

EmbeddedDigraph with_rotation(const EmbeddedDigraph& d, VertexId v, std::vector<Dart> r) {
  auto rot = d.rotations();
  rot[v] = std::move(r);
  return EmbeddedDigraph(d.num_vertices(), d.arcs(), rot);
}

}  // namespace

TEST_SUITE("combmap") {
  TEST_CASE("dipole(3) is a valid plane alternating dimap") {
    CHECK(validate(dipole(3)).ok());
  }

  TEST_CASE("swapping two rotation entries breaks alternation") {
    const auto d = dipole(3);
    auto r = std::vector<Dart>(d.rotation(0).begin(), d.rotation(0).end());
    std::swap(r[0], r[1]);
    std::swap(r[1], r[2]);
    const auto report = validate(with_rotation(d, 0, r));
    CHECK_FALSE(report.ok());
    CHECK(mentions(report, "alternation violated at vertex v0"));
    CHECK_FALSE(is_alternating(with_rotation(d, 0, r)));
  }

  TEST_CASE("fig3 D_R fixture is valid with 5 vertices and 12 arcs") {
    const auto d = corpus::fig3_dr();
    CHECK(d.num_vertices() == 5);
    CHECK(d.num_arcs() == 12);
    CHECK(validate(d).ok());
    CHECK(d.out_degree(0) == 4);
    for (int v = 1; v <= 4; ++v) CHECK(d.out_degree(v) == 2);
  }

  TEST_CASE("a dart at the wrong vertex is reported") {
    const auto d = dipole(2);
    auto rot = d.rotations();
    std::swap(rot[0][0], rot[1][0]);
    const auto report = validate(EmbeddedDigraph(2, d.arcs(), rot));
    CHECK(mentions(report, "which is not its"));
  }

  TEST_CASE("degenerate and disconnected inputs are rejected") {
    const EmbeddedDigraph loop(1, {{0, 0, 0}}, {{{0, DartDir::Out}, {0, DartDir::In}}});
    CHECK(mentions(validate(loop), "fewer than two arcs"));
    CHECK(mentions(validate(EmbeddedDigraph(1, {}, {{}})), "fewer than two arcs"));

    const auto d2 = dipole(2);
    std::vector<Arc> arcs = d2.arcs();
    auto rot = d2.rotations();
    for (const auto& a : d2.arcs()) arcs.push_back({a.id + 4, a.tail + 2, a.head + 2});
    for (int v = 0; v < 2; ++v) {
      rot.emplace_back();
      for (const auto& x : d2.rotation(v)) rot.back().push_back({x.arc + 4, x.dir});
    }
    const EmbeddedDigraph two(4, arcs, rot);
    CHECK(mentions(validate(two), "disconnected"));
    CHECK_FALSE(is_connected(two));
  }

  TEST_CASE("construction rejects out-of-range ids") {
    CHECK_THROWS_AS(EmbeddedDigraph(1, {{0, 0, 3}}, {{}}), Error);
    CHECK_THROWS_AS(EmbeddedDigraph(1, {{1, 0, 0}}, {{}}), Error);
    CHECK_THROWS_AS(EmbeddedDigraph(1, {}, {{{5, DartDir::Out}}}), Error);
    CHECK_THROWS_AS(EmbeddedDigraph(2, {}, {{}}), Error);
  }

  TEST_CASE("dipole(m) has 2m digon faces") {
    for (int m = 2; m <= 6; ++m) {
      const auto d = dipole(m);
      const auto faces = trace_faces(d);
      CHECK(static_cast<int>(faces.size()) == 2 * m);
      for (const auto& f : faces) CHECK(f.size() == 2);
      CHECK(d.num_vertices() - d.num_arcs() + static_cast<int>(faces.size()) == 2);
      CHECK(euler_characteristic(d) == 2);
    }
  }

  TEST_CASE("successors follow the rotation at the head") {
    const auto d = corpus::fig3_dr();
    for (const auto& a : d.arcs()) {
      const auto r = d.rotation(a.head);
      const int n = static_cast<int>(r.size());
      const int at = static_cast<int>(std::find(r.begin(), r.end(), Dart{a.id, DartDir::In}) -
                                      r.begin());
      CHECK(left_successor(d, a.id) == r[(at + 1) % n].arc);
      CHECK(right_successor(d, a.id) == r[(at + n - 1) % n].arc);
      CHECK(d.arc(left_successor(d, a.id)).tail == a.head);
    }
  }

  TEST_CASE("face walks are closed directed walks, one left and one right per arc") {
    for (const auto& [name, d] : corpus::digraphs()) {
      CAPTURE(name);
      const auto inc = face_incidence(d);
      std::vector<int> left(static_cast<std::size_t>(d.num_arcs())), right(left);
      bool seen_right = false;
      for (std::size_t i = 0; i < inc.faces.size(); ++i) {
        const auto& f = inc.faces[i];
        if (f.side == FaceSide::Right) seen_right = true;
        CHECK_FALSE((f.side == FaceSide::Left && seen_right));  // left faces first
        CHECK(f.arcs.front() == *std::min_element(f.arcs.begin(), f.arcs.end()));
        for (std::size_t k = 0; k < f.size(); ++k) {
          const auto& a = d.arc(f.arcs[k]);
          const auto& b = d.arc(f.arcs[(k + 1) % f.size()]);
          CHECK(a.head == b.tail);
          (f.side == FaceSide::Left ? left : right)[a.id]++;
          CHECK((f.side == FaceSide::Left ? inc.left_face : inc.right_face)[a.id] ==
                static_cast<int>(i));
        }
      }
      for (int a = 0; a < d.num_arcs(); ++a) {
        CHECK(left[a] == 1);
        CHECK(right[a] == 1);
      }
      CHECK(euler_characteristic(d) == 2);
    }
  }

  TEST_CASE("underlying graph checks on small examples") {
    const auto c1 = underlying_graph_checks(dipole(1));
    CHECK(c1.has_2_edge_cut);
    CHECK_FALSE(c1.has_loop);
    CHECK(underlying_graph_checks(dipole(3)).all_clear());
    const auto w = underlying_graph_checks(wedge(dipole(2), 1, dipole(2), 0));
    CHECK(w.has_cut_vertex);
    CHECK_FALSE(w.has_loop);
  }

  TEST_CASE("two-edge-cut detection agrees with a brute-force connectivity oracle") {
    for (const auto& [name, d] : corpus::digraphs()) {
      if (d.num_arcs() > 60) continue;
      CAPTURE(name);
      CHECK(underlying_graph_checks(d).has_2_edge_cut == oracle_ref::has_two_edge_cut(d));
    }
  }

  TEST_CASE("out-degree equals in-degree and degrees sum to the arc count") {
    for (const auto& [name, d] : corpus::digraphs()) {
      CAPTURE(name);
      int total = 0;
      for (int v = 0; v < d.num_vertices(); ++v) {
        CHECK(d.out_degree(v) == d.in_degree(v));
        CHECK(static_cast<int>(d.rotation(v).size()) == 2 * d.out_degree(v));
        total += d.out_degree(v);
      }
      CHECK(total == d.num_arcs());
    }
  }

  TEST_CASE("canonical code is invariant under relabelling") {
    oracle_ref::Rng rng(20261015);
    for (const auto& [name, d] : corpus::digraphs()) {
      if (d.num_arcs() > 80) continue;
      CAPTURE(name);
      const auto e = oracle_ref::relabelled(d, rng);
      CHECK(validate(e).ok());
      CHECK(isomorphic(d, e));
    }
  }

  TEST_CASE("canonical code separates non-isomorphic maps") {
    CHECK_FALSE(isomorphic(dipole(2), dipole(3)));
    CHECK_FALSE(isomorphic(corpus::fig3_dr(), corpus::k4_doubled()));
    const auto r = realization_digraph({2, 3});
    const auto s = realization_digraph({3, 2});
    CHECK(isomorphic(r, s));
    CHECK_FALSE(isomorphic(realization_digraph({2, 2, 2}), realization_digraph({2, 4})));
  }

  TEST_CASE("mirror and reversal preserve validity and face sizes") {
    const auto d = corpus::fig3_dr();
    for (const auto& e : {mirrored(d), reversed(d)}) {
      CHECK(validate(e).ok());
      std::vector<std::size_t> a, b;
      for (const auto& f : trace_faces(d)) a.push_back(f.size());
      for (const auto& f : trace_faces(e)) b.push_back(f.size());
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
    CHECK(mirrored(mirrored(d)) == d);
    CHECK(reversed(reversed(d)) == d);
  }

  TEST_CASE("normalized forms compare label-equal rotations") {
    const auto d = dipole(3);
    auto r = std::vector<Dart>(d.rotation(0).begin(), d.rotation(0).end());
    std::rotate(r.begin(), r.begin() + 2, r.end());
    const auto e = with_rotation(d, 0, r);
    CHECK(e == d);
    CHECK(e.normalized().rotations() == d.normalized().rotations());
  }

  TEST_CASE("dimap JSON round trip is lossless") {
    for (const auto& [name, d] : corpus::digraphs()) {
      CAPTURE(name);
      const Json j = dimap_to_json(d);
      const auto back = dimap_from_json(j);
      CHECK(back.arcs() == d.arcs());
      CHECK(back.rotations() == d.rotations());
      CHECK(dimap_to_json(back) == j);
      CHECK(dimap_from_json(Json::parse(j.dump())).rotations() == d.rotations());
    }
  }

  TEST_CASE("malformed dimap JSON is rejected") {
    Json j = dimap_to_json(dipole(2));
    Json bad_schema = j;
    bad_schema["schema"] = "dimap.v2";
    CHECK_THROWS_AS(dimap_from_json(bad_schema), Error);
    Json no_arcs = j;
    no_arcs.erase("arcs");
    CHECK_THROWS_WITH_AS(dimap_from_json(no_arcs), doctest::Contains("arcs"), Error);
    Json bad_dir = j;
    bad_dir["rotation"]["0"][0][0] = "sideways";
    CHECK_THROWS_AS(dimap_from_json(bad_dir), Error);
    Json bad_key = j;
    bad_key["rotation"]["x"] = Json::array();
    CHECK_THROWS_AS(dimap_from_json(bad_key), Error);
  }
}
