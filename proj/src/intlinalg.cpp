#include "ccc/intlinalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>

namespace ccc {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

struct Worker {
  IntMatrix d, u, v;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < d.cols; ++j) std::swap(d.at(a, j), d.at(b, j));
    for (int j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < d.rows; ++i) std::swap(d.at(i, a), d.at(i, b));
    for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
  }
  void add_row(int dst, int src, const Int& f) {  // row dst += f * row src
    for (int j = 0; j < d.cols; ++j) d.at(dst, j) += f * d.at(src, j);
    for (int j = 0; j < u.cols; ++j) u.at(dst, j) += f * u.at(src, j);
  }
  void add_col(int dst, int src, const Int& f) {
    for (int i = 0; i < d.rows; ++i) d.at(i, dst) += f * d.at(i, src);
    for (int i = 0; i < v.rows; ++i) v.at(i, dst) += f * v.at(i, src);
  }
  void negate_row(int r) {
    for (int j = 0; j < d.cols; ++j) d.at(r, j) = -d.at(r, j);
    for (int j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
  }

  // smallest nonzero |entry| in d[t.., t..], ties by row-major position
  bool find_pivot(int t, int& pi, int& pj) const {
    pi = -1;
    pj = -1;
    Int best = 0;
    for (int i = t; i < d.rows; ++i)
      for (int j = t; j < d.cols; ++j) {
        const Int& x = d.at(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (pi < 0 || ax < best) {
          best = ax;
          pi = i;
          pj = j;
        }
      }
    return pi >= 0;
  }
};

}  // namespace

std::vector<Int> SNFResult::diagonal() const {
  std::vector<Int> out;
  const int k = std::min(d.rows, d.cols);
  out.reserve(k);
  for (int i = 0; i < k; ++i) out.push_back(d.at(i, i));
  return out;
}

SNFResult smith_normal_form(const IntMatrix& m) {
  Worker w{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.cols)};
  const int steps = std::min(m.rows, m.cols);

  for (int t = 0; t < steps; ++t) {
    for (;;) {
      int pi, pj;
      if (!w.find_pivot(t, pi, pj)) goto done;  // all-zero tail
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);

      // Euclidean reduction of row/column t against the pivot
      bool reduced = true;
      for (int i = t + 1; i < w.d.rows; ++i) {
        if (w.d.at(i, t) == 0) continue;
        Int q = w.d.at(i, t) / w.d.at(t, t);
        w.add_row(i, t, -q);
        if (w.d.at(i, t) != 0) reduced = false;  // remainder smaller than pivot
      }
      for (int j = t + 1; j < w.d.cols; ++j) {
        if (w.d.at(t, j) == 0) continue;
        Int q = w.d.at(t, j) / w.d.at(t, t);
        w.add_col(j, t, -q);
        if (w.d.at(t, j) != 0) reduced = false;
      }
      if (!reduced) continue;  // a smaller pivot appeared; repeat

      // pivot must divide every remaining entry to keep the chain
      int bi = -1, bj = -1;
      for (int i = t + 1; i < w.d.rows && bi < 0; ++i)
        for (int j = t + 1; j < w.d.cols; ++j)
          if (w.d.at(i, j) % w.d.at(t, t) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      (void)bj;
      w.add_row(t, bi, 1);  // fold the offending row in and reduce again
    }
    if (w.d.at(t, t) < 0) w.negate_row(t);
  }
done:
  SNFResult res{std::move(w.d), std::move(w.u), std::move(w.v)};

  const auto diag = res.diagonal();
  for (size_t i = 0; i + 1 < diag.size(); ++i)
    if (diag[i] != 0 && diag[i + 1] % diag[i] != 0)
      fail(ErrorKind::internal_inconsistency, "divisibility chain broken");
  if (!(res.u * m * res.v == res.d))
    fail(ErrorKind::internal_inconsistency, "U*A*V != D");
  return res;
}

InvariantFactors invariant_factors_minors(const IntMatrix& a) {
  if (!a.square()) fail(ErrorKind::shape_mismatch, "invariant factors need a square matrix");
  const int n = a.rows;
  if (n > 6) fail(ErrorKind::too_large, "gcd-of-minors oracle is guarded to n <= 6");
  if (n > 0 && det(a) == 0) fail(ErrorKind::singular, "matrix is singular");

  // subsets of {0..n-1} of size k, as bitmasks
  std::vector<std::vector<unsigned>> subsets(n + 1);
  for (unsigned mask = 1; mask < (1u << n); ++mask)
    subsets[__builtin_popcount(mask)].push_back(mask);

  InvariantFactors out;
  Int prev_gamma = 1;
  for (int k = 1; k <= n; ++k) {
    Int gamma = 0;
    for (unsigned rmask : subsets[k]) {
      std::vector<int> rows;
      for (int i = 0; i < n; ++i)
        if (rmask & (1u << i)) rows.push_back(i);
      for (unsigned cmask : subsets[k]) {
        std::vector<int> cols;
        for (int j = 0; j < n; ++j)
          if (cmask & (1u << j)) cols.push_back(j);
        IntMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub.at(i, j) = a.at(rows[i], cols[j]);
        gamma = gcd(gamma, det(sub));
        if (gamma == 1) break;
      }
      if (gamma == 1) break;
    }
    if (gamma == 0) fail(ErrorKind::internal_inconsistency, "vanishing minor gcd for nonsingular matrix");
    Int delta = gamma / prev_gamma;
    if (delta > 1) out.factors.push_back(delta);
    prev_gamma = gamma;
  }
  out.m = static_cast<int>(out.factors.size());
  return out;
}

InvariantFactors invariant_factors_snf(const IntMatrix& a) {
  InvariantFactors out;
  for (const Int& d : smith_normal_form(a).diagonal())
    if (d > 1) out.factors.push_back(d);
  out.m = static_cast<int>(out.factors.size());
  return out;
}

int min_generators(const IntMatrix& a) {
  if (!a.square()) fail(ErrorKind::shape_mismatch, "presentation matrix must be square");
  if (a.rows > 0 && det(a) == 0)
    fail(ErrorKind::singular, "singular presentation: the group is infinite");
  return invariant_factors_snf(a).m;
}

}  // namespace ccc
