#include <algorithm>
#include <cmath>

#include "corpus.hpp"
#include "dimap/constructs.hpp"
#include "dimap/oracle.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace dimap;

namespace {

EmbeddedDigraph small_random_dimap(oracle_ref::Rng& rng) {
  switch (rng.uniform(0, 3)) {
    case 0:
      return dipole(rng.uniform(1, 5));
    case 1:
      return realization_digraph({rng.uniform(2, 4), rng.uniform(2, 4)});
    case 2:
      return corpus::fig3_dr();
    default:
      return arc_splice(dipole(rng.uniform(1, 3)), 0, dipole(rng.uniform(1, 3)), 1);
  }
}

std::vector<std::size_t> face_sizes(const EmbeddedDigraph& d) {
  std::vector<std::size_t> out;
  for (const auto& f : trace_faces(d)) out.push_back(f.size());
  std::sort(out.begin(), out.end());
  return out;
}

const FaceWalk& face_of_size(const std::vector<FaceWalk>& faces, std::size_t k) {
  return *std::find_if(faces.begin(), faces.end(), [&](const FaceWalk& f) { return f.size() == k; });
}

}  // namespace

TEST_SUITE("constructs") {
  TEST_CASE("dipoles") {
    CHECK(tree_number(dipole(2)) == 2);
    CHECK(tree_number(dipole(1)) == 1);
    CHECK(sandpile_group(dipole(1)).torsion.empty());
    CHECK(canonical_group(triangulate(dipole(7))).to_string() == "Z7");
    CHECK_THROWS_AS(dipole(0), Error);
    const auto d = dipole(3);
    for (int j = 0; j < 3; ++j) {
      CHECK(d.arc(2 * j).tail == 0);
      CHECK(d.arc(2 * j + 1).tail == 1);
    }
  }

  TEST_CASE("wedges multiply tree numbers and add groups") {
    CHECK(sandpile_group(wedge(dipole(2), 1, dipole(2), 0)).to_string() == "Z2+Z2");
    const auto g = sandpile_group(wedge(dipole(2), 0, dipole(3), 1));
    CHECK(g.free_rank == 0);
    CHECK(g.torsion == std::vector<mpz_class>{6});

    oracle_ref::Rng rng(101);
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = small_random_dimap(rng);
      const auto b = small_random_dimap(rng);
      const auto w = wedge(a, rng.uniform(0, a.num_vertices() - 1), b,
                           rng.uniform(0, b.num_vertices() - 1));
      CHECK(validate(w).ok());
      CHECK(w.num_vertices() == a.num_vertices() + b.num_vertices() - 1);
      CHECK(tree_number(w) == tree_number(a) * tree_number(b));
      CHECK(sandpile_group(w) == direct_sum(sandpile_group(a), sandpile_group(b)));
    }
  }

  TEST_CASE("wedge rejects unknown vertices") {
    CHECK_THROWS_AS(wedge(dipole(2), 2, dipole(2), 0), Error);
  }

  TEST_CASE("abelian realization") {
    const auto t22 = abelian_realization({2, 2});
    CHECK(canonical_group(t22).to_string() == "Z2+Z2");
    CHECK(isomorphic(derive(t22, VertexClass::R), derive(corpus::fig6(), VertexClass::R)));
    CHECK(t22.num_vertices == corpus::fig6().num_vertices);
    CHECK(canonical_group(abelian_realization({5})).to_string() == "Z5");
    const auto g = canonical_group(abelian_realization({2, 3, 4}));
    CHECK(g.free_rank == 0);
    CHECK(g.torsion == std::vector<mpz_class>{2, 12});
    CHECK_THROWS_AS(abelian_realization({2, 1}), Error);
    CHECK_THROWS_AS(abelian_realization({}), Error);
  }

  TEST_CASE("arc splice") {
    CHECK(tree_number(arc_splice(dipole(2), 0, dipole(2), 0)) == 4);
    CHECK(tree_number(arc_splice(dipole(2), 0, dipole(3), 1)) == 6);
    const auto s = arc_splice(dipole(2), 0, dipole(3), 1);
    CHECK(s.num_arcs() == 4 + 6 - 1);
    CHECK(s.num_vertices() == 3);
    CHECK_THROWS_AS(arc_splice(dipole(2), 9, dipole(2), 0), Error);

    oracle_ref::Rng rng(202);
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = small_random_dimap(rng);
      const auto b = small_random_dimap(rng);
      const auto x = arc_splice(a, rng.uniform(0, a.num_arcs() - 1), b,
                                rng.uniform(0, b.num_arcs() - 1));
      CHECK(validate(x).ok());
      CHECK(tree_number(x) == tree_number(a) * tree_number(b));
    }
  }

  TEST_CASE("subdividing the 4-face of fig3 D_R") {
    const auto d = corpus::fig3_dr();
    const auto f = find_subdividable_face(d, 4);
    REQUIRE(f.has_value());
    CHECK(f->size() == 4);
    const auto e = subdivide_face(d, *f);
    CHECK(validate(e).ok());
    CHECK(e.num_vertices() == 6);
    CHECK(e.num_arcs() == 20);
    CHECK(e.out_degree(5) == 4);

    // The 4-face becomes four triangles and four digons.
    auto before = face_sizes(d);
    before.erase(std::find(before.begin(), before.end(), 4));
    for (int i = 0; i < 4; ++i) {
      before.push_back(2);
      before.push_back(3);
    }
    std::sort(before.begin(), before.end());
    CHECK(face_sizes(e) == before);

    // Exact value, confirmed by the arborescence oracle. The factor is 32/3.
    CHECK(tree_number(e) == 160);
    CHECK(count_arborescences(e, 0) == 160);
    CHECK(count_arborescences(e, 5) == 160);
    mpq_class ratio(tree_number(e), tree_number(d));
    ratio.canonicalize();
    CHECK(ratio == mpq_class(32, 3));
  }

  TEST_CASE("subdivision works on faces of both sides") {
    for (const auto& base : {corpus::fig3_dr(), mirrored(corpus::fig3_dr()),
                             reversed(corpus::fig3_dr())}) {
      const auto f = find_subdividable_face(base, 4);
      REQUIRE(f.has_value());
      const auto e = subdivide_face(base, *f);
      CHECK(validate(e).ok());
      CHECK(tree_number(e) == 160);
      const auto sizes = face_sizes(e);
      CHECK(std::count(sizes.begin(), sizes.end(), 3u) >= 4);
    }
    CHECK(find_subdividable_face(corpus::fig3_dr(), 4)->side !=
          find_subdividable_face(mirrored(corpus::fig3_dr()), 4)->side);
  }

  TEST_CASE("subdivision of 3-faces") {
    int found = 0;
    for (const auto& [name, t] : corpus::triangulations())
      for (auto c : kAllClasses) {
        const auto d = derive(t, c);
        const auto f = find_subdividable_face(d, 3);
        if (!f) continue;
        CAPTURE(name);
        ++found;
        const auto e = subdivide_face(d, *f);
        CHECK(validate(e).ok());
        CHECK(tree_number(e) > tree_number(d));
      }
    CHECK(found > 0);
    // One instance pinned: the S dimap of triangulate(k4_doubled).
    const auto d = derive(triangulate(corpus::k4_doubled()), VertexClass::S);
    const auto e = subdivide_face(d, *find_subdividable_face(d, 3));
    CHECK(tree_number(d) == 16);
    CHECK(tree_number(e) == 91);
  }

  TEST_CASE("subdivision preconditions") {
    const auto d = dipole(3);
    const auto faces = trace_faces(d);
    const auto why = subdivision_obstacle(d, faces.front());
    REQUIRE(why.has_value());
    CHECK(why->find("k > 2 required") != std::string::npos);
    CHECK_THROWS_WITH_AS(subdivide_face(d, faces.front()), doctest::Contains("k > 2 required"),
                         Error);

    // r0 has out-degree 4, so faces through it are refused.
    const auto fig = corpus::fig3_dr();
    const auto all = trace_faces(fig);
    for (const auto& f : all) {
      const auto vs = f.vertices(fig);
      if (std::find(vs.begin(), vs.end(), 0) != vs.end() && f.size() > 2)
        CHECK(subdivision_obstacle(fig, f).has_value());
    }
    CHECK_FALSE(subdivision_obstacle(fig, face_of_size(all, 4)).has_value());
    CHECK_FALSE(find_subdividable_face(dipole(4), 4).has_value());
  }

  TEST_CASE("subdivision factor matches k (3/2)^(k-1)") {
    for (int k = 1; k <= 10; ++k) CHECK(subdivision_factor(k) == oracle_ref::closed_form_factor(k));
    CHECK(subdivision_factor(3) == mpq_class(27, 4));
    CHECK(subdivision_factor(4) == mpq_class(27, 2));
    CHECK_THROWS_AS(subdivision_factor(0), Error);
  }

  TEST_CASE("fig1 has no subdividable 4-face") {
    for (auto c : kAllClasses) CHECK_FALSE(find_subdividable_face(derive(corpus::fig1(), c), 4));
  }

  TEST_CASE("lower bound family from fig3") {
    const auto steps = lower_bound_family(corpus::fig3(), 5);
    REQUIRE(steps.size() == 6);
    const std::vector<long> expected{15, 160, 1785, 20295, 230400, 2612233};
    for (std::size_t s = 0; s < steps.size(); ++s) {
      CAPTURE(s);
      CHECK(steps[s].step == static_cast<int>(s));
      CHECK(steps[s].t == 12 + 8 * static_cast<int>(s));
      CHECK(steps[s].triangulation.t() == steps[s].t);
      CHECK(steps[s].tree_number == expected[s]);
      CHECK(validate(steps[s].triangulation).ok());
      CHECK(is_simple(steps[s].triangulation));
      CHECK(trinity_report(steps[s].triangulation).consistent());
      CHECK(steps[s].exponent ==
            doctest::Approx(std::pow(static_cast<double>(expected[s]), 1.0 / steps[s].t)));
    }
    CHECK(steps[5].exponent == doctest::Approx(1.3286300636).epsilon(1e-9));
  }

  TEST_CASE("the family takes its next face from the first eligible class") {
    const auto steps = lower_bound_family(corpus::fig3(), 5);
    const std::vector<VertexClass> expected{VertexClass::R, VertexClass::C, VertexClass::C,
                                            VertexClass::R, VertexClass::C, VertexClass::C};
    for (std::size_t s = 0; s < steps.size(); ++s) {
      CAPTURE(s);
      const auto& t = steps[s].triangulation;
      CHECK(steps[s].face_class == expected[s]);
      for (auto c : kAllClasses) {
        if (c == steps[s].face_class) break;
        CHECK_FALSE(find_subdividable_face(derive(t, c), 4));
      }
      CHECK(find_subdividable_face(derive(t, steps[s].face_class), 4));
    }
  }

  TEST_CASE("family requires an eligible face") {
    CHECK_THROWS_AS(lower_bound_family(corpus::fig1(), 1), Error);
    CHECK_THROWS_AS(lower_bound_family(corpus::fig1(), 0), Error);
  }

  TEST_CASE("triangulating a subdivision stays simple") {
    const auto d = corpus::fig3_dr();
    const auto e = subdivide_face(d, *find_subdividable_face(d, 4));
    CHECK(underlying_graph_checks(e).all_clear());
    CHECK(is_simple(triangulate(e)));
  }
}
