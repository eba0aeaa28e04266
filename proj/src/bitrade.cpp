#include "dimap/bitrade.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace dimap {

PartialLatinSquare::PartialLatinSquare(std::vector<Triple> triples) : triples_(std::move(triples)) {
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
}

bool PartialLatinSquare::contains(const Triple& x) const {
  return std::binary_search(triples_.begin(), triples_.end(), x);
}

std::vector<int> PartialLatinSquare::indices(int k) const {
  std::set<int> s;
  for (const Triple& x : triples_) s.insert(x[k]);
  return {s.begin(), s.end()};
}

namespace {

std::string show(const Triple& x) {
  return "(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + ")";
}

}  // namespace

ValidationReport verify_partial_latin_square(const PartialLatinSquare& p) {
  ValidationReport report;
  const auto& ts = p.triples();
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      int agree = 0;
      for (int k = 0; k < 3; ++k) agree += ts[i][k] == ts[j][k] ? 1 : 0;
      if (agree > 1)
        report.violations.push_back("triples " + show(ts[i]) + " and " + show(ts[j]) +
                                    " agree in " + std::to_string(agree) + " coordinates");
    }
  std::map<int, int> role;
  for (int k = 0; k < 3; ++k)
    for (int x : p.indices(k)) {
      auto [it, fresh] = role.emplace(x, k);
      if (!fresh && it->second != k)
        report.violations.push_back("index " + std::to_string(x) + " used in two coordinates");
    }
  return report;
}

ValidationReport verify_bitrade(const Bitrade& b) {
  ValidationReport report;
  for (const auto* sq : {&b.white, &b.black}) {
    auto r = verify_partial_latin_square(*sq);
    for (auto& v : r.violations)
      report.violations.push_back((sq == &b.white ? "W: " : "B: ") + v);
  }
  for (const Triple& x : b.white.triples())
    if (b.black.contains(x)) report.violations.push_back("triple " + show(x) + " lies in W and B");
  for (int k = 0; k < 3; ++k)
    if (b.white.indices(k) != b.black.indices(k))
      report.violations.push_back("W and B use different index sets in coordinate " +
                                  std::to_string(k));

  auto check = [&](const PartialLatinSquare& from, const PartialLatinSquare& to, const char* name) {
    for (const Triple& x : from.triples())
      for (int k = 0; k < 3; ++k) {
        // Triples of `to` agreeing with x off coordinate k and differing on it.
        int matches = 0;
        for (const Triple& y : to.triples()) {
          bool same_rest = true;
          for (int m = 0; m < 3; ++m)
            if (m != k && y[m] != x[m]) same_rest = false;
          if (same_rest && y[k] != x[k]) ++matches;
        }
        if (matches != 1)
          report.violations.push_back(std::string(name) + " triple " + show(x) + " has " +
                                      std::to_string(matches) + " partners in coordinate " +
                                      std::to_string(k));
      }
  };
  check(b.white, b.black, "W");
  check(b.black, b.white, "B");
  return report;
}

Bitrade extract_bitrade(const Triangulation& t) {
  const auto report = validate(t);
  if (!report.ok()) throw Error("invalid triangulation: " + report.violations.front());
  if (t.t() < 2) throw Error("bitrade extraction needs t >= 2");
  if (!is_simple(t)) throw Error("bitrade extraction needs a simple underlying graph");
  const auto classes = t.coloured() ? t.classes : three_colour(t);
  std::vector<Triple> white;
  std::vector<Triple> black;
  for (const TriFace& f : t.faces) {
    Triple x{};
    for (const Corner& c : f.boundary) x[static_cast<int>(classes[c.vertex])] = c.vertex;
    (f.colour == FaceColour::White ? white : black).push_back(x);
  }
  return {PartialLatinSquare(std::move(white)), PartialLatinSquare(std::move(black))};
}

std::array<PartialLatinSquare, 6> conjugates(const PartialLatinSquare& p) {
  std::array<PartialLatinSquare, 6> out;
  for (std::size_t i = 0; i < kConjugatePermutations.size(); ++i) {
    const auto& perm = kConjugatePermutations[i];
    std::vector<Triple> ts;
    for (const Triple& x : p.triples()) ts.push_back({x[perm[0]], x[perm[1]], x[perm[2]]});
    out[i] = PartialLatinSquare(std::move(ts));
  }
  return out;
}

std::vector<std::pair<int, int>> support_graph(const PartialLatinSquare& p) {
  std::set<std::pair<int, int>> edges;
  for (const Triple& x : p.triples())
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) edges.emplace(std::min(x[a], x[b]), std::max(x[a], x[b]));
  return {edges.begin(), edges.end()};
}

AbelianGroupShape presentation_group(const PartialLatinSquare& p) {
  std::set<int> all;
  for (const Triple& x : p.triples()) all.insert(x.begin(), x.end());
  const std::vector<int> gens(all.begin(), all.end());
  auto index = [&](int x) {
    return static_cast<std::size_t>(std::lower_bound(gens.begin(), gens.end(), x) - gens.begin());
  };
  std::vector<std::vector<long>> rels;
  for (const Triple& x : p.triples()) {
    std::vector<long> r(gens.size(), 0);
    for (int v : x) ++r[index(v)];
    rels.push_back(std::move(r));
  }
  return group_from_presentation(static_cast<int>(gens.size()), rels);
}

std::string render_grid(const PartialLatinSquare& p, const Triangulation& t) {
  const auto rows = p.indices(0);
  const auto cols = p.indices(1);
  std::map<std::pair<int, int>, int> cell;
  for (const Triple& x : p.triples()) cell[{x[0], x[1]}] = x[2];
  std::size_t width = 1;
  for (int c : cols) width = std::max(width, t.label(c).size());
  for (const auto& [rc, s] : cell) width = std::max(width, t.label(s).size());
  std::size_t row_width = 0;
  for (int r : rows) row_width = std::max(row_width, t.label(r).size());

  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  auto emit = [](std::ostringstream& out, std::string line) {
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
  };
  std::ostringstream out;
  std::string line = pad("", row_width);
  for (int c : cols) line += ' ' + pad(t.label(c), width);
  emit(out, line);
  for (int r : rows) {
    line = pad(t.label(r), row_width);
    for (int c : cols) {
      auto it = cell.find({r, c});
      line += ' ' + pad(it == cell.end() ? "." : t.label(it->second), width);
    }
    emit(out, line);
  }
  return out.str();
}

}  // namespace dimap
