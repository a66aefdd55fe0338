#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "ccc/errors.hpp"

namespace ccc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense integer matrix with exact (arbitrary-precision) entries.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool empty() const { return rows == 0 || cols == 0; }
  bool square() const { return rows == cols; }

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  IntMatrix transposed() const;
  bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);

/// Exact determinant (fraction-free Bareiss elimination). Empty matrix -> 1.
Int det(const IntMatrix& m);

/// Symmetric integer matrix with labeled basis.
struct SymIntMatrix {
  int n = 0;
  std::vector<Int> a;  // row-major, n*n
  std::vector<std::string> labels;

  SymIntMatrix() = default;
  explicit SymIntMatrix(int dim) : n(dim), a(static_cast<size_t>(dim) * dim) {}

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  bool empty() const { return n == 0; }
  IntMatrix as_int_matrix() const;

  /// Builds from explicit rows; throws shape_mismatch if not square/symmetric.
  static SymIntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  bool operator==(const SymIntMatrix& o) const { return n == o.n && a == o.a; }
};

Int det(const SymIntMatrix& m);

/// Removes row i and column j (used for first-minor arguments).
SymIntMatrix delete_row_col(const SymIntMatrix& m, int i);

/// gcd of all entries (0 for an empty matrix).
Int entry_gcd(const SymIntMatrix& m);

std::string to_string(const IntMatrix& m);
std::string to_string(const SymIntMatrix& m);

}  // namespace ccc
