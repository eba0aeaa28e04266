#include "dimap/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "dimap/bitrade.hpp"
#include "dimap/constructs.hpp"
#include "dimap/io.hpp"
#include "dimap/oracle.hpp"

#ifndef DIMAP_FIXTURE_DIR
#define DIMAP_FIXTURE_DIR "fixtures"
#endif

namespace dimap {

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

std::string fixed(double x, int digits = 10) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Validation of one file of either schema; returns the report text.
bool validate_file(const std::string& path, std::string& text) {
  std::ostringstream out;
  bool ok = false;
  try {
    const Json j = read_json(path);
    const std::string schema = j.value("schema", "");
    ValidationReport report;
    if (schema == "tri.v1") {
      report = validate(tri_from_json(j));
    } else if (schema == "dimap.v1" || (schema.empty() && j.contains("arcs"))) {
      report = validate(dimap_from_json(j));
    } else {
      report.violations.push_back("unknown schema \"" + schema + "\"");
    }
    ok = report.ok();
    out << path << ": " << (ok ? "ok" : "INVALID") << '\n';
    for (const auto& v : report.violations) out << "  - " << v << '\n';
  } catch (const std::exception& e) {
    out << path << ": INVALID\n  - " << e.what() << '\n';
  }
  text = out.str();
  return ok;
}

int cmd_validate(const std::vector<std::string>& files, int jobs, std::ostream& out) {
  std::vector<std::string> text(files.size());
  std::vector<char> ok(files.size(), 0);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, files.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < files.size(); i += workers) ok[i] = validate_file(files[i], text[i]);
    });
  for (auto& t : pool) t.join();
  for (const auto& s : text) out << s;
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; }) ? kOk : kFailure;
}

int cmd_trinity(const std::string& file, std::ostream& out, std::ostream& err) {
  const Triangulation t = load_tri(file);
  const auto report = validate(t);
  if (!report.ok()) {
    for (const auto& v : report.violations) err << v << '\n';
    return kFailure;
  }
  const TrinityReport r = trinity_report(t);
  out << "class,vertices,arcs,tree_number,group\n";
  for (std::size_t k = 0; k < 3; ++k) {
    const auto d = derive(t, kAllClasses[k]);
    out << class_letter(kAllClasses[k]) << ',' << d.num_vertices() << ',' << d.num_arcs() << ','
        << r.tree_numbers[k].get_str() << ',' << r.groups[k].to_string() << '\n';
  }
  if (!r.consistent()) {
    err << "internal error: the three derived dimaps disagree\n";
    return kFailure;
  }
  return kOk;
}

void emit_json(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << j.dump(2) << '\n';
  else
    write_json(path, j);
}

std::vector<int> parse_orders(const std::string& list) {
  std::vector<int> orders;
  std::stringstream s(list);
  std::string item;
  while (std::getline(s, item, ',')) {
    std::size_t used = 0;
    int m = 0;
    try {
      m = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw CLI::ValidationError("orders", "not an integer: " + item);
    orders.push_back(m);
  }
  return orders;
}

int cmd_family(int steps, const std::string& csv_path, std::ostream& out) {
  const auto family = lower_bound_family(load_tri(fixture_dir() / "fig3.tri.json"), steps);
  std::ostringstream csv;
  csv << "step,t,tree_number,exponent\n";
  for (const auto& s : family)
    csv << s.step << ',' << s.t << ',' << s.tree_number.get_str() << ',' << fixed(s.exponent) << '\n';
  if (csv_path.empty()) {
    out << csv.str();
  } else {
    std::ofstream f(csv_path);
    if (!f) throw Error("cannot write " + csv_path);
    f << csv.str();
  }
  return kOk;
}

int cmd_bitrade(const std::string& file, bool grids, std::ostream& out) {
  const Triangulation t = load_tri(file);
  const Bitrade b = extract_bitrade(t);
  const auto check = verify_bitrade(b);
  if (grids) {
    out << "W\n" << render_grid(b.white, t) << "\nB\n" << render_grid(b.black, t);
  } else {
    auto triples = [&](const PartialLatinSquare& p) {
      Json a = Json::array();
      for (const Triple& x : p.triples())
        a.push_back({t.label(x[0]), t.label(x[1]), t.label(x[2])});
      return a;
    };
    Json j{{"W", triples(b.white)},
           {"B", triples(b.black)},
           {"A_W", group_to_json(presentation_group(b.white))},
           {"A_B", group_to_json(presentation_group(b.black))},
           {"valid", check.ok()}};
    out << j.dump(2) << '\n';
  }
  return check.ok() ? kOk : kFailure;
}

int cmd_arbs(const std::string& file, std::optional<int> root, std::ostream& out) {
  const auto d = load_dimap(file);
  const auto report = validate(d);
  if (!report.ok()) throw Error("invalid digraph: " + report.violations.front());
  if (root && (*root < 0 || *root >= d.num_vertices())) throw Error("unknown root");
  const auto tree = tree_number(d);
  out << "root,arborescences,tree_number,match\n";
  bool all = true;
  for (VertexId r = 0; r < d.num_vertices(); ++r) {
    if (root && *root != r) continue;
    const auto count = count_arborescences(d, r);
    all = all && count == tree;
    out << r << ',' << count.get_str() << ',' << tree.get_str() << ',' << yes_no(count == tree) << '\n';
  }
  return all ? kOk : kFailure;
}

int cmd_bounds(const std::string& file, std::ostream& out) {
  const auto d = load_dimap(file);
  const auto report = validate(d);
  if (!report.ok()) throw Error("invalid digraph: " + report.violations.front());
  const auto tree = tree_number(d);
  out << "bound,i0,mu,Delta,delta,value,tree_number,holds\n";
  bool all = true;
  for (VertexId i0 = 0; i0 < d.num_vertices(); ++i0) {
    const auto b = janson_bound(d, i0);
    const bool holds = janson_holds(b, tree);
    all = all && holds;
    out << "janson," << i0 << ',' << b.mu.get_str() << ',' << b.big_delta.get_str() << ','
        << b.small_delta.get_str() << ',' << fixed(b.value()) << ',' << tree.get_str() << ','
        << yes_no(holds) << '\n';
  }
  const auto f = face_bound(d);
  if (f.applies()) {
    const bool holds = face_bound_holds(f, tree);
    all = all && holds;
    out << "face,,,,," << fixed(f.value()) << ',' << tree.get_str() << ',' << yes_no(holds) << '\n';
  } else {
    out << "face,,,,,," << tree.get_str() << ",n/a\n";
  }
  return all ? kOk : kFailure;
}

int cmd_tri_bounds(const std::string& file, std::ostream& out) {
  const auto t = load_tri(file);
  const auto r = triangulation_bound_report(t);
  out << "n,t,tree_number,three_ln_tree,degree_cycle_bound,degree_cycle_check,vertex_bound_rhs,vertex_bound_check,near_homogeneous,"
         "near_homogeneous_rhs,near_homogeneous_check\n";
  out << r.n << ',' << t.t() << ',' << r.tree_number.get_str() << ',' << fixed(r.log3_tree) << ','
      << fixed(r.degree_cycle_bound) << ',' << yes_no(r.degree_cycle_check) << ',' << fixed(r.vertex_bound_rhs) << ','
      << yes_no(r.vertex_bound_check) << ',' << yes_no(r.near_homogeneous) << ','
      << (r.near_homogeneous_rhs ? fixed(*r.near_homogeneous_rhs) : "") << ','
      << (r.near_homogeneous_check ? yes_no(*r.near_homogeneous_check) : "") << '\n';
  const bool ok = r.degree_cycle_check && r.vertex_bound_check && r.near_homogeneous_check.value_or(true);
  return ok ? kOk : kFailure;
}

int cmd_fixtures(std::ostream& out) {
  const auto dir = fixture_dir();
  if (!std::filesystem::is_directory(dir)) throw Error("no fixture directory at " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  out << "file,schema,summary\n";
  for (const auto& p : files) {
    const Json j = read_json(p);
    const std::string schema = j.value("schema", "");
    std::string summary;
    if (schema == "tri.v1") {
      const auto t = tri_from_json(j);
      summary = "V=" + std::to_string(t.num_vertices) + " t=" + std::to_string(t.t()) +
                (is_simple(t) ? " simple" : " multigraph");
    } else if (schema == "dimap.v1") {
      const auto d = dimap_from_json(j);
      summary = "V=" + std::to_string(d.num_vertices()) + " A=" + std::to_string(d.num_arcs());
    }
    out << p.filename().string() << ',' << schema << ',' << summary << '\n';
  }
  return kOk;
}

}  // namespace

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("TRINITY_FIXTURES"); env != nullptr && *env != '\0') return env;
  return DIMAP_FIXTURE_DIR;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plane alternating dimaps, face 2-coloured triangulations and their groups",
               "dimap"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto* validate_cmd = app.add_subcommand("validate", "Validate dimap.v1 or tri.v1 files");
  std::vector<std::string> validate_files;
  int jobs = 1;
  validate_cmd->add_option("files", validate_files, "Files to validate")->required()->check(CLI::ExistingFile);
  validate_cmd->add_option("--jobs", jobs, "Files validated in parallel")->check(CLI::PositiveNumber);
  validate_cmd->callback([&] { action = [&] { return cmd_validate(validate_files, jobs, out); }; });

  auto* trinity_cmd = app.add_subcommand("trinity", "Tree numbers and groups of the three derived dimaps");
  trinity_cmd->require_subcommand(1);
  auto* trinity_check = trinity_cmd->add_subcommand("check", "Print the report as CSV");
  std::string tri_file;
  trinity_check->add_option("file", tri_file, "tri.v1 file")->required()->check(CLI::ExistingFile);
  trinity_check->callback([&] { action = [&] { return cmd_trinity(tri_file, out, err); }; });

  auto* construct = app.add_subcommand("construct", "Build dimaps and triangulations");
  construct->require_subcommand(1);
  std::string out_path;
  auto* c_dipole = construct->add_subcommand("dipole", "Dipole with m arcs each way (dimap.v1)");
  int m = 0;
  c_dipole->add_option("m", m, "Arcs in each direction")->required();
  c_dipole->add_option("--out", out_path, "Write to a file instead of stdout");
  c_dipole->callback([&] { action = [&] { emit_json(dimap_to_json(dipole(m)), out_path, out); return kOk; }; });

  auto* c_wedge = construct->add_subcommand("wedge", "Identify a vertex of one dimap with one of another");
  std::string f1, f2;
  int x1 = 0, x2 = 0;
  c_wedge->add_option("file1", f1)->required()->check(CLI::ExistingFile);
  c_wedge->add_option("v1", x1)->required();
  c_wedge->add_option("file2", f2)->required()->check(CLI::ExistingFile);
  c_wedge->add_option("v2", x2)->required();
  c_wedge->add_option("--out", out_path, "Write to a file instead of stdout");
  c_wedge->callback([&] {
    action = [&] {
      emit_json(dimap_to_json(wedge(load_dimap(f1), x1, load_dimap(f2), x2)), out_path, out);
      return kOk;
    };
  });

  auto* c_splice = construct->add_subcommand("splice", "Splice two dimaps along an arc of each");
  c_splice->add_option("file1", f1)->required()->check(CLI::ExistingFile);
  c_splice->add_option("a1", x1)->required();
  c_splice->add_option("file2", f2)->required()->check(CLI::ExistingFile);
  c_splice->add_option("a2", x2)->required();
  c_splice->add_option("--out", out_path, "Write to a file instead of stdout");
  c_splice->callback([&] {
    action = [&] {
      emit_json(dimap_to_json(arc_splice(load_dimap(f1), x1, load_dimap(f2), x2)), out_path, out);
      return kOk;
    };
  });

  auto* c_realize = construct->add_subcommand("realize", "Triangulation with group Z_m1 + Z_m2 + ... (tri.v1)");
  std::string orders;
  c_realize->add_option("orders", orders, "Comma-separated orders, each at least 2")->required();
  c_realize->add_option("--out", out_path, "Write to a file instead of stdout");
  c_realize->callback([&] {
    action = [&] {
      emit_json(tri_to_json(abelian_realization(parse_orders(orders))), out_path, out);
      return kOk;
    };
  });

  int steps = 0;
  std::string csv_path;
  auto* c_family = construct->add_subcommand("family", "Lower-bound growth family as CSV");
  c_family->add_option("--steps", steps, "Subdivision steps")->required()->check(CLI::NonNegativeNumber);
  c_family->add_option("--csv", csv_path, "Write the CSV to a file");
  c_family->callback([&] { action = [&] { return cmd_family(steps, csv_path, out); }; });

  auto* family = app.add_subcommand("family", "Lower-bound growth family as CSV");
  family->add_option("--steps", steps, "Subdivision steps")->required()->check(CLI::NonNegativeNumber);
  family->add_option("--csv", csv_path, "Write the CSV to a file");
  family->callback([&] { action = [&] { return cmd_family(steps, csv_path, out); }; });

  auto* bitrade = app.add_subcommand("bitrade", "Latin bitrades of triangulations");
  bitrade->require_subcommand(1);
  auto* b_extract = bitrade->add_subcommand("extract", "Extract (W, B) from a tri.v1 file");
  bool grids = false;
  b_extract->add_option("file", tri_file)->required()->check(CLI::ExistingFile);
  b_extract->add_flag("--print-grids", grids, "Print row-by-column arrays");
  b_extract->callback([&] { action = [&] { return cmd_bitrade(tri_file, grids, out); }; });

  auto* oracle = app.add_subcommand("oracle", "Brute-force counts and bounds");
  oracle->require_subcommand(1);
  std::string dimap_file;
  auto* o_arbs = oracle->add_subcommand("arbs", "Count arborescences by enumeration");
  std::optional<int> root;
  o_arbs->add_option("file", dimap_file)->required()->check(CLI::ExistingFile);
  o_arbs->add_option("--root", root, "Root vertex (default: every vertex)");
  o_arbs->callback([&] { action = [&] { return cmd_arbs(dimap_file, root, out); }; });
  auto* o_bounds = oracle->add_subcommand("bounds", "Cycle and face bounds of a dimap");
  o_bounds->add_option("file", dimap_file)->required()->check(CLI::ExistingFile);
  o_bounds->callback([&] { action = [&] { return cmd_bounds(dimap_file, out); }; });
  auto* o_tri = oracle->add_subcommand("tri-bounds", "Degree bounds of a triangulation");
  o_tri->add_option("file", tri_file)->required()->check(CLI::ExistingFile);
  o_tri->callback([&] { action = [&] { return cmd_tri_bounds(tri_file, out); }; });

  auto* fixtures = app.add_subcommand("fixtures", "Shipped fixtures");
  fixtures->require_subcommand(1);
  auto* f_list = fixtures->add_subcommand("list", "List fixture files");
  f_list->callback([&] { action = [&] { return cmd_fixtures(out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace dimap
