#include "ccc/matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

namespace ccc {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      fail(ErrorKind::shape_mismatch, "ragged rows in matrix literal");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) fail(ErrorKind::shape_mismatch, "matrix product shape mismatch");
  IntMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

// Bareiss: division-free up to exact divisions, no fractions.
Int det(const IntMatrix& m) {
  if (!m.square()) fail(ErrorKind::shape_mismatch, "determinant of a non-square matrix");
  const int n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        w.at(i, j) = num / prev;  // exact by Bareiss
      }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

IntMatrix SymIntMatrix::as_int_matrix() const {
  IntMatrix m(n, n);
  m.a = a;
  return m;
}

SymIntMatrix SymIntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  IntMatrix m = IntMatrix::from_rows(rows);
  if (!m.square()) fail(ErrorKind::shape_mismatch, "symmetric matrix must be square");
  for (int i = 0; i < m.rows; ++i)
    for (int j = i + 1; j < m.cols; ++j)
      if (m.at(i, j) != m.at(j, i)) fail(ErrorKind::shape_mismatch, "matrix is not symmetric");
  SymIntMatrix s(m.rows);
  s.a = std::move(m.a);
  return s;
}

Int det(const SymIntMatrix& m) { return det(m.as_int_matrix()); }

SymIntMatrix delete_row_col(const SymIntMatrix& m, int idx) {
  if (idx < 0 || idx >= m.n) fail(ErrorKind::shape_mismatch, "row/column index out of range");
  SymIntMatrix r(m.n - 1);
  for (int i = 0, ri = 0; i < m.n; ++i) {
    if (i == idx) continue;
    for (int j = 0, rj = 0; j < m.n; ++j) {
      if (j == idx) continue;
      r.at(ri, rj) = m.at(i, j);
      ++rj;
    }
    if (!m.labels.empty()) r.labels.push_back(m.labels[i]);
    ++ri;
  }
  return r;
}

Int entry_gcd(const SymIntMatrix& m) {
  Int g = 0;
  for (const Int& x : m.a) g = boost::multiprecision::gcd(g, x);
  return g;
}

static std::string render(int rows, int cols, const std::vector<Int>& a) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols; ++j) os << (j ? "," : "") << a[static_cast<size_t>(i) * cols + j];
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string to_string(const IntMatrix& m) { return render(m.rows, m.cols, m.a); }
std::string to_string(const SymIntMatrix& m) { return render(m.n, m.n, m.a); }

}  // namespace ccc
