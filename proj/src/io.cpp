#include "dimap/io.hpp"

#include <fstream>

namespace dimap {

namespace {

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw Error(std::string("field \"") + key + "\": " + e.what());
  }
}

void check_schema(const Json& j, const std::string& expected) {
  if (!j.is_object()) throw Error("expected a JSON object");
  if (j.contains("schema") && j.at("schema") != expected)
    throw Error("schema is " + j.at("schema").dump() + ", expected \"" + expected + "\"");
}

int dense_vertex_count(const Json& vertices, bool objects) {
  if (!vertices.is_array()) throw Error("\"vertices\" must be an array");
  int expected = 0;
  for (const Json& v : vertices) {
    const int id = objects ? get_field<int>(v, "id") : v.get<int>();
    if (id != expected) throw Error("vertex ids must be 0..n-1 in order");
    ++expected;
  }
  return expected;
}

VertexClass parse_class(const std::string& s) {
  if (s == "R") return VertexClass::R;
  if (s == "C") return VertexClass::C;
  if (s == "S") return VertexClass::S;
  throw Error("unknown vertex colour \"" + s + "\"");
}

}  // namespace

EmbeddedDigraph dimap_from_json(const Json& j) {
  check_schema(j, "dimap.v1");
  const int n = dense_vertex_count(get_field<Json>(j, "vertices"), false);
  std::vector<Arc> arcs;
  for (const Json& a : get_field<Json>(j, "arcs"))
    arcs.push_back({get_field<int>(a, "id"), get_field<int>(a, "tail"), get_field<int>(a, "head")});
  const Json rot = get_field<Json>(j, "rotation");
  if (!rot.is_object()) throw Error("\"rotation\" must be an object keyed by vertex id");
  std::vector<std::vector<Dart>> rotation(static_cast<std::size_t>(n));
  for (const auto& [key, darts] : rot.items()) {
    int v = -1;
    try {
      v = std::stoi(key);
    } catch (const std::exception&) {
      throw Error("rotation key \"" + key + "\" is not a vertex id");
    }
    if (v < 0 || v >= n || std::to_string(v) != key)
      throw Error("rotation key \"" + key + "\" is not a vertex id");
    for (const Json& dart : darts) {
      if (!dart.is_array() || dart.size() != 2 || !dart[0].is_string() || !dart[1].is_number_integer())
        throw Error("darts must be [\"out\"|\"in\", arc id]");
      const auto dir = dart[0].get<std::string>();
      if (dir != "out" && dir != "in") throw Error("dart direction must be \"out\" or \"in\"");
      rotation[v].push_back({dart[1].get<int>(), dir == "out" ? DartDir::Out : DartDir::In});
    }
  }
  return EmbeddedDigraph(n, std::move(arcs), std::move(rotation));
}

Json dimap_to_json(const EmbeddedDigraph& d) {
  Json j;
  j["schema"] = "dimap.v1";
  Json vertices = Json::array();
  for (int v = 0; v < d.num_vertices(); ++v) vertices.push_back(v);
  j["vertices"] = vertices;
  Json arcs = Json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({{"id", a.id}, {"tail", a.tail}, {"head", a.head}});
  j["arcs"] = arcs;
  Json rot = Json::object();
  for (int v = 0; v < d.num_vertices(); ++v) {
    Json darts = Json::array();
    for (const Dart& dart : d.rotation(v))
      darts.push_back({dart.dir == DartDir::Out ? "out" : "in", dart.arc});
    rot[std::to_string(v)] = darts;
  }
  j["rotation"] = rot;
  return j;
}

Triangulation tri_from_json(const Json& j) {
  check_schema(j, "tri.v1");
  Triangulation t;
  const Json vertices = get_field<Json>(j, "vertices");
  t.num_vertices = dense_vertex_count(vertices, true);
  bool any_colour = false;
  for (const Json& v : vertices) any_colour = any_colour || v.contains("colour");
  for (const Json& v : vertices) {
    if (any_colour) t.classes.push_back(parse_class(get_field<std::string>(v, "colour")));
    t.labels.push_back(v.contains("label") ? get_field<std::string>(v, "label") : std::string());
  }
  if (std::all_of(t.labels.begin(), t.labels.end(), [](const auto& s) { return s.empty(); }))
    t.labels.clear();
  for (const Json& e : get_field<Json>(j, "edges")) {
    const auto ends = get_field<std::vector<int>>(e, "ends");
    if (ends.size() != 2) throw Error("an edge must have two ends");
    t.edges.push_back({get_field<int>(e, "id"), ends[0], ends[1]});
  }
  for (const Json& f : get_field<Json>(j, "faces")) {
    TriFace face;
    face.id = get_field<int>(f, "id");
    const auto colour = get_field<std::string>(f, "colour");
    if (colour != "black" && colour != "white") throw Error("face colour must be black or white");
    face.colour = colour == "black" ? FaceColour::Black : FaceColour::White;
    const auto boundary = get_field<std::vector<std::vector<int>>>(f, "boundary");
    if (boundary.size() != 3) throw Error("a face boundary must have three corners");
    for (int k = 0; k < 3; ++k) {
      if (boundary[k].size() != 2) throw Error("a boundary corner is [edge, vertex]");
      face.boundary[k] = {boundary[k][0], boundary[k][1]};
    }
    t.faces.push_back(face);
  }
  if (j.contains("rotation")) {
    const Json rot = j.at("rotation");
    t.rotation.assign(static_cast<std::size_t>(t.num_vertices), {});
    for (const auto& [key, edges] : rot.items()) {
      int v = -1;
      try {
        v = std::stoi(key);
      } catch (const std::exception&) {
      }
      if (v < 0 || v >= t.num_vertices || std::to_string(v) != key)
        throw Error("rotation key \"" + key + "\" is not a vertex id");
      t.rotation[v] = edges.get<std::vector<int>>();
    }
  } else {
    t.rotation = rotation_from_faces(t.num_vertices, t.edges, t.faces);
  }
  return t;
}

Json tri_to_json(const Triangulation& t) {
  Json j;
  j["schema"] = "tri.v1";
  Json vertices = Json::array();
  for (int v = 0; v < t.num_vertices; ++v) {
    Json vj{{"id", v}};
    if (t.coloured()) vj["colour"] = std::string(1, class_letter(t.classes[v]));
    if (!t.labels.empty()) vj["label"] = t.labels[v];
    vertices.push_back(vj);
  }
  j["vertices"] = vertices;
  Json edges = Json::array();
  for (const TriEdge& e : t.edges) edges.push_back({{"id", e.id}, {"ends", {e.u, e.v}}});
  j["edges"] = edges;
  Json faces = Json::array();
  for (const TriFace& f : t.faces) {
    Json b = Json::array();
    for (const Corner& c : f.boundary) b.push_back({c.edge, c.vertex});
    faces.push_back({{"id", f.id}, {"colour", colour_name(f.colour)}, {"boundary", b}});
  }
  j["faces"] = faces;
  Json rot = Json::object();
  for (int v = 0; v < static_cast<int>(t.rotation.size()); ++v) rot[std::to_string(v)] = t.rotation[v];
  j["rotation"] = rot;
  return j;
}

Json group_to_json(const AbelianGroupShape& g) {
  Json torsion = Json::array();
  for (const auto& d : g.torsion) {
    if (d.fits_slong_p())
      torsion.push_back(d.get_si());
    else
      torsion.push_back(d.get_str());
  }
  return {{"free_rank", g.free_rank}, {"torsion", torsion}};
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

EmbeddedDigraph load_dimap(const std::filesystem::path& path) {
  return dimap_from_json(read_json(path));
}

Triangulation load_tri(const std::filesystem::path& path) { return tri_from_json(read_json(path)); }

}  // namespace dimap
