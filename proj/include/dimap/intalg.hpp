#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dimap/embedded_digraph.hpp"

namespace dimap {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(int rows, int cols, std::vector<mpz_class> entries);
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& at(int r, int c) { return entries_[index(r, c)]; }
  const mpz_class& at(int r, int c) const { return entries_[index(r, c)]; }
  const std::vector<mpz_class>& entries() const { return entries_; }

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> entries_;
};

/// Z^free_rank plus Z_{d1} + ... + Z_{dk}, with d1 | d2 | ... and every di >= 2.
struct AbelianGroupShape {
  int free_rank = 0;
  std::vector<mpz_class> torsion;

  mpz_class torsion_order() const;
  std::string to_string() const;
  friend bool operator==(const AbelianGroupShape&, const AbelianGroupShape&) = default;
};

/// Shape of a direct sum, renormalised to invariant factors.
AbelianGroupShape direct_sum(const AbelianGroupShape& a, const AbelianGroupShape& b);
/// Invariant factors of Z_{m1} + ... + Z_{mk}.
AbelianGroupShape cyclic_sum(const std::vector<mpz_class>& orders);

struct SmithForm {
  std::vector<mpz_class> diag;  // length min(rows, cols)
  IntMatrix u;                  // rows x rows
  IntMatrix v;                  // cols x cols
};

/// U * M * V = diag(d1, ..., dr, 0, ...), with d1 | d2 | ... non-negative and
/// U, V unimodular. The pivot is always the nonzero entry of smallest absolute
/// value in the remaining block, ties broken by row-major position.
SmithForm smith_normal_form(const IntMatrix& m);

/// Fraction-free (Bareiss) elimination. Throws std::invalid_argument if m is
/// not square.
mpz_class determinant(const IntMatrix& m);

/// L = B - A: out-degree diagonal minus arc-multiplicity adjacency.
IntMatrix laplacian(const EmbeddedDigraph& d);
IntMatrix reduced_laplacian(const EmbeddedDigraph& d, VertexId omit);

/// Torsion of Z^{n-1} / Z^{n-1} L'(D). Throws Error for a disconnected D.
AbelianGroupShape sandpile_group(const EmbeddedDigraph& d, VertexId omit = 0);
/// det L'(D), computed with the row and column of vertex 0 deleted.
mpz_class tree_number(const EmbeddedDigraph& d);

/// Cokernel of the relation matrix whose rows are the given relations.
AbelianGroupShape group_from_presentation(int n_generators,
                                          const std::vector<std::vector<long>>& relations);

/// ln(x) for a positive big integer.
double log_mpz(const mpz_class& x);

}  // namespace dimap
