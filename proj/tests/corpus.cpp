#include "corpus.hpp"

#include "dimap/constructs.hpp"
#include "dimap/io.hpp"

using namespace dimap;

namespace corpus {

std::string fixture(const std::string& file) { return std::string(FIXTURE_DIR) + "/" + file; }

Triangulation fig1() { return load_tri(fixture("fig1.tri.json")); }
Triangulation fig3() { return load_tri(fixture("fig3.tri.json")); }
Triangulation fig6() { return load_tri(fixture("fig6.tri.json")); }
EmbeddedDigraph fig3_dr() { return load_dimap(fixture("fig3_dr.dimap.json")); }
EmbeddedDigraph k4_doubled() { return load_dimap(fixture("k4_doubled.dimap.json")); }

namespace {

std::vector<NamedDigraph> constructed() {
  std::vector<NamedDigraph> out;
  for (int m = 1; m <= 8; ++m) out.push_back({"dipole(" + std::to_string(m) + ")", dipole(m)});
  out.push_back({"fig3_dr", fig3_dr()});
  out.push_back({"k4_doubled", k4_doubled()});
  for (auto [a, b] : {std::pair{2, 2}, {2, 3}, {3, 4}, {1, 5}})
    out.push_back({"wedge(dipole(" + std::to_string(a) + "),dipole(" + std::to_string(b) + "))",
                   wedge(dipole(a), 1, dipole(b), 0)});
  out.push_back({"wedge(fig3_dr,dipole(2))", wedge(fig3_dr(), 3, dipole(2), 1)});
  out.push_back({"splice(dipole(2),dipole(2))", arc_splice(dipole(2), 0, dipole(2), 1)});
  out.push_back({"splice(dipole(2),dipole(3))", arc_splice(dipole(2), 0, dipole(3), 1)});
  out.push_back({"splice(fig3_dr,k4_doubled)", arc_splice(fig3_dr(), 0, k4_doubled(), 3)});
  out.push_back({"splice(k4_doubled,dipole(3))", arc_splice(k4_doubled(), 5, dipole(3), 2)});
  out.push_back({"realization(2,2)", realization_digraph({2, 2})});
  out.push_back({"realization(2,3,4)", realization_digraph({2, 3, 4})});
  out.push_back({"realization(3,5)", realization_digraph({3, 5})});
  {
    const EmbeddedDigraph d = fig3_dr();
    out.push_back({"subdivide(fig3_dr)", subdivide_face(d, *find_subdividable_face(d, 4))});
  }
  out.push_back({"mirror(fig3_dr)", mirrored(fig3_dr())});
  out.push_back({"reverse(k4_doubled)", reversed(k4_doubled())});
  return out;
}

}  // namespace

const std::vector<NamedDigraph>& digraphs() {
  static const std::vector<NamedDigraph> all = [] {
    std::vector<NamedDigraph> out = constructed();
    const std::vector<std::pair<std::string, Triangulation>> tris{
        {"fig1", fig1()}, {"fig3", fig3()}, {"fig6", fig6()}};
    for (const auto& [name, t] : tris)
      for (VertexClass c : kAllClasses)
        out.push_back({name + ".D_" + std::string(1, class_letter(c)), derive(t, c)});
    return out;
  }();
  return all;
}

std::vector<NamedTriangulation> constructed_triangulations() {
  std::vector<NamedTriangulation> out;
  for (int m = 2; m <= 20; ++m)
    out.push_back({"triangulate(dipole(" + std::to_string(m) + "))", triangulate(dipole(m))});
  for (const auto& [name, d] : constructed()) {
    if (name.rfind("dipole(", 0) == 0) continue;
    out.push_back({"triangulate(" + name + ")", triangulate(d)});
  }
  const std::vector<std::vector<int>> realizations{{2, 4}, {3, 3}, {2, 2, 2}, {5, 7},
                                                   {2, 6, 3}, {4, 4, 2}, {2, 2, 2, 2}};
  for (const auto& orders : realizations) {
    std::string name = "realize(";
    for (std::size_t i = 0; i < orders.size(); ++i) name += (i ? "," : "") + std::to_string(orders[i]);
    out.push_back({name + ")", abelian_realization(orders)});
  }
  for (const auto& step : lower_bound_family(fig3(), 5))
    if (step.step > 0)
      out.push_back({"family step " + std::to_string(step.step), step.triangulation});
  // Re-triangulating a derived class gives a triangulation with new labels.
  for (VertexClass c : {VertexClass::C, VertexClass::S}) {
    out.push_back({std::string("triangulate(fig1.D_") + class_letter(c) + ")", triangulate(derive(fig1(), c))});
    out.push_back({std::string("triangulate(fig3.D_") + class_letter(c) + ")", triangulate(derive(fig3(), c))});
  }
  return out;
}

const std::vector<NamedTriangulation>& triangulations() {
  static const std::vector<NamedTriangulation> all = [] {
    std::vector<NamedTriangulation> out{{"fig1", fig1()}, {"fig3", fig3()}, {"fig6", fig6()}};
    for (auto& t : constructed_triangulations()) out.push_back(std::move(t));
    return out;
  }();
  return all;
}

}  // namespace corpus
