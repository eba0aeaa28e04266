#include "dimap/intalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dimap {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  if (entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    throw std::invalid_argument("entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in product");
  IntMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const mpz_class& x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) out.at(i, j) += x * b.at(k, j);
    }
  return out;
}

mpz_class AbelianGroupShape::torsion_order() const {
  mpz_class order = 1;
  for (const auto& d : torsion) order *= d;
  return order;
}

std::string AbelianGroupShape::to_string() const {
  std::string s;
  for (int i = 0; i < free_rank; ++i) s += s.empty() ? "Z" : "+Z";
  for (const auto& d : torsion) s += (s.empty() ? "Z" : "+Z") + d.get_str();
  return s.empty() ? "0" : s;
}

namespace {

AbelianGroupShape shape_from_diagonal(int n_generators, const std::vector<mpz_class>& diag) {
  AbelianGroupShape g;
  int rank = 0;
  for (const auto& d : diag) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) g.torsion.push_back(d);
  }
  g.free_rank = n_generators - rank;
  return g;
}

}  // namespace

AbelianGroupShape cyclic_sum(const std::vector<mpz_class>& orders) {
  const int k = static_cast<int>(orders.size());
  IntMatrix m(k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = orders[i];
  return shape_from_diagonal(k, smith_normal_form(m).diag);
}

AbelianGroupShape direct_sum(const AbelianGroupShape& a, const AbelianGroupShape& b) {
  std::vector<mpz_class> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  AbelianGroupShape g = cyclic_sum(orders);
  g.free_rank = a.free_rank + b.free_rank;
  return g;
}

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const int rows = a.rows();
  const int cols = a.cols();
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  // Row op: row[dst] -= q * row[src], mirrored in U.
  auto row_sub = [&](int dst, int src, const mpz_class& q) {
    for (int j = 0; j < cols; ++j) a.at(dst, j) -= q * a.at(src, j);
    for (int j = 0; j < rows; ++j) u.at(dst, j) -= q * u.at(src, j);
  };
  auto col_sub = [&](int dst, int src, const mpz_class& q) {
    for (int i = 0; i < rows; ++i) a.at(i, dst) -= q * a.at(i, src);
    for (int i = 0; i < cols; ++i) v.at(i, dst) -= q * v.at(i, src);
  };

  const int steps = std::min(rows, cols);
  for (int k = 0; k < steps; ++k) {
    for (;;) {
      int pr = -1;
      int pc = -1;
      for (int i = k; i < rows; ++i)
        for (int j = k; j < cols; ++j) {
          if (a.at(i, j) == 0) continue;
          if (pr < 0 || mpz_cmpabs(a.at(i, j).get_mpz_t(), a.at(pr, pc).get_mpz_t()) < 0) {
            pr = i;
            pc = j;
          }
        }
      if (pr < 0) break;  // remaining block is zero
      a.swap_rows(k, pr);
      u.swap_rows(k, pr);
      a.swap_cols(k, pc);
      v.swap_cols(k, pc);

      bool clean = true;
      for (int i = k + 1; i < rows; ++i) {
        if (a.at(i, k) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(i, k).get_mpz_t(), a.at(k, k).get_mpz_t());
        row_sub(i, k, q);
        if (a.at(i, k) != 0) clean = false;
      }
      for (int j = k + 1; j < cols; ++j) {
        if (a.at(k, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(k, j).get_mpz_t(), a.at(k, k).get_mpz_t());
        col_sub(j, k, q);
        if (a.at(k, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot row and column are clear; enforce divisibility of the rest.
      int bad_row = -1;
      for (int i = k + 1; i < rows && bad_row < 0; ++i)
        for (int j = k + 1; j < cols; ++j)
          if (!mpz_divisible_p(a.at(i, j).get_mpz_t(), a.at(k, k).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row < 0) break;
      // Adding the offending row to the pivot row leaves a remainder to reduce.
      row_sub(k, bad_row, mpz_class(-1));
    }
    if (a.at(k, k) < 0) {
      for (int j = 0; j < cols; ++j) a.at(k, j) = -a.at(k, j);
      for (int j = 0; j < rows; ++j) u.at(k, j) = -u.at(k, j);
    }
  }

  SmithForm out;
  out.diag.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) out.diag.push_back(a.at(k, k));
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

mpz_class determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n && swap < 0; ++i)
        if (a.at(i, k) != 0) swap = i;
      if (swap < 0) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

IntMatrix laplacian(const EmbeddedDigraph& d) {
  const int n = d.num_vertices();
  IntMatrix l(n, n);
  for (const Arc& a : d.arcs()) {
    l.at(a.tail, a.tail) += 1;
    l.at(a.tail, a.head) -= 1;
  }
  return l;
}

IntMatrix reduced_laplacian(const EmbeddedDigraph& d, VertexId omit) {
  const int n = d.num_vertices();
  if (omit < 0 || omit >= n) throw Error("unknown vertex " + std::to_string(omit));
  const IntMatrix l = laplacian(d);
  IntMatrix r(n - 1, n - 1);
  for (int i = 0, ri = 0; i < n; ++i) {
    if (i == omit) continue;
    for (int j = 0, rj = 0; j < n; ++j) {
      if (j == omit) continue;
      r.at(ri, rj++) = l.at(i, j);
    }
    ++ri;
  }
  return r;
}

AbelianGroupShape sandpile_group(const EmbeddedDigraph& d, VertexId omit) {
  if (!is_connected(d)) throw Error("sandpile group of a disconnected digraph");
  const IntMatrix r = reduced_laplacian(d, omit);
  return shape_from_diagonal(r.rows(), smith_normal_form(r).diag);
}

mpz_class tree_number(const EmbeddedDigraph& d) {
  if (!is_connected(d)) throw Error("tree number of a disconnected digraph");
  return determinant(reduced_laplacian(d, 0));
}

AbelianGroupShape group_from_presentation(int n_generators,
                                          const std::vector<std::vector<long>>& relations) {
  IntMatrix m(static_cast<int>(relations.size()), n_generators);
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (static_cast<int>(relations[i].size()) != n_generators)
      throw std::invalid_argument("relation length differs from generator count");
    for (int j = 0; j < n_generators; ++j) m.at(static_cast<int>(i), j) = relations[i][j];
  }
  return shape_from_diagonal(n_generators, smith_normal_form(m).diag);
}

double log_mpz(const mpz_class& x) {
  if (x <= 0) throw Error("logarithm of a non-positive integer");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace dimap
