#pragma once

#include <filesystem>
#include <string>

#include "dimap/embedded_digraph.hpp"
#include "dimap/intalg.hpp"
#include "dimap/triangulation.hpp"
#include "json.hpp"

namespace dimap {

using Json = nlohmann::ordered_json;

/// dimap.v1: {"schema", "vertices": [ids], "arcs": [{"id","tail","head"}],
/// "rotation": {"v": [["out"|"in", arc], ...]}}. Throws Error on malformed input.
EmbeddedDigraph dimap_from_json(const Json& j);
Json dimap_to_json(const EmbeddedDigraph& d);

/// tri.v1: vertices with colour and label, edges with ends, faces with colour
/// and boundary [[edge, vertex] x3], rotation of edge ids per vertex.
Triangulation tri_from_json(const Json& j);
Json tri_to_json(const Triangulation& t);

/// {"free_rank": r, "torsion": [...]}; invariant factors that do not fit in
/// 64 bits are written as decimal strings.
Json group_to_json(const AbelianGroupShape& g);

Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& j);

EmbeddedDigraph load_dimap(const std::filesystem::path& path);
Triangulation load_tri(const std::filesystem::path& path);

}  // namespace dimap
