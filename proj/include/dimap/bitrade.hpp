#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "dimap/intalg.hpp"
#include "dimap/triangulation.hpp"

namespace dimap {

/// (row, column, symbol). Indices are vertex ids of the source triangulation.
using Triple = std::array<int, 3>;

/// A set of triples kept sorted and duplicate-free.
class PartialLatinSquare {
 public:
  PartialLatinSquare() = default;
  explicit PartialLatinSquare(std::vector<Triple> triples);

  const std::vector<Triple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  bool contains(const Triple& x) const;
  /// Distinct indices used in coordinate k (0 rows, 1 columns, 2 symbols).
  std::vector<int> indices(int k) const;

  friend bool operator==(const PartialLatinSquare&, const PartialLatinSquare&) = default;

 private:
  std::vector<Triple> triples_;
};

struct Bitrade {
  PartialLatinSquare white;
  PartialLatinSquare black;
};

/// Two distinct triples agree in at most one coordinate, and no index is used
/// in two different coordinates.
ValidationReport verify_partial_latin_square(const PartialLatinSquare& p);

/// Both squares valid, disjoint, on the same row/column/symbol sets, and every
/// triple of either is matched coordinate-by-coordinate by unique triples of
/// the other.
ValidationReport verify_bitrade(const Bitrade& b);

/// White faces become W and black faces B, each face contributing its
/// (R, C, S) vertices. Requires a valid, simple triangulation with t >= 2.
Bitrade extract_bitrade(const Triangulation& t);

/// The six role permutations; index 0 is the identity. Permutation p sends a
/// triple x to (x[p[0]], x[p[1]], x[p[2]]).
inline constexpr std::array<std::array<int, 3>, 6> kConjugatePermutations{
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
std::array<PartialLatinSquare, 6> conjugates(const PartialLatinSquare& p);

/// Edges {x, y}, x < y, of pairs occurring together in some triple, sorted.
std::vector<std::pair<int, int>> support_graph(const PartialLatinSquare& p);

/// Abelian group generated by all indices subject to r + c + s = 0 for every
/// triple.
AbelianGroupShape presentation_group(const PartialLatinSquare& p);

/// Row-by-column array of symbols, rows and columns in increasing id order,
/// empty cells shown as '.'.
std::string render_grid(const PartialLatinSquare& p, const Triangulation& t);

}  // namespace dimap
