#include "ccc/case2.hpp"

#include <random>

namespace ccc {

PerturbationPair perturb(const SymIntMatrix& g) {
  if (g.n == 0) fail(ErrorKind::empty_matrix, "perturbation needs a nonempty matrix");
  PerturbationPair p{g, g};
  p.g_shifted.at(0, 0) -= 2;
  return p;
}

bool verify_laplace_identity(const PerturbationPair& p) {
  const Int lhs = det(p.g) - det(p.g_shifted);
  const Int rhs = 2 * det(delete_row_col(p.g, 0));
  return lhs == rhs;
}

bool verify_case2_contradiction(const SymIntMatrix& g) {
  if (g.n == 0) fail(ErrorKind::empty_matrix, "contradiction check needs a nonempty matrix");
  if (is_definite(g) == Definiteness::indefinite_or_degenerate)
    fail(ErrorKind::not_definite, "contradiction check needs a definite matrix");
  const PerturbationPair p = perturb(g);
  const Int minor = det(delete_row_col(g, 0));
  return minor != 0 && det(p.g) != det(p.g_shifted);
}

SymIntMatrix random_definite(int n, std::uint64_t seed, int magnitude_bound) {
  if (n < 1) fail(ErrorKind::empty_matrix, "dimension must be at least 1");
  if (magnitude_bound < 1) magnitude_bound = 1;
  std::mt19937_64 rng(seed);
  const auto draw = [&] {
    return static_cast<long>(rng() % (2 * magnitude_bound + 1)) - magnitude_bound;
  };
  IntMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.at(i, j) = draw();
  IntMatrix g = b * b.transposed();
  for (int i = 0; i < n; ++i) g.at(i, i) += 1;  // strictly positive definite
  const bool negate = (rng() & 1) != 0;
  SymIntMatrix s(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.at(i, j) = negate ? Int(-g.at(i, j)) : g.at(i, j);
  if (is_definite(s) == Definiteness::indefinite_or_degenerate)
    fail(ErrorKind::internal_inconsistency, "generated matrix failed definiteness re-check");
  return s;
}

bool verify_seifert_shift(const IntMatrix& v) {
  if (!v.square()) fail(ErrorKind::shape_mismatch, "Seifert matrix candidate must be square");
  if (v.rows == 0) fail(ErrorKind::empty_matrix, "Seifert shift needs a nonempty matrix");
  IntMatrix shifted = v;
  shifted.at(0, 0) -= 1;
  const IntMatrix vt = v.transposed(), st = shifted.transposed();
  for (int i = 0; i < v.rows; ++i)
    for (int j = 0; j < v.cols; ++j) {
      const Int sym = v.at(i, j) + vt.at(i, j);
      const Int sym_shifted = shifted.at(i, j) + st.at(i, j);
      const Int want = (i == 0 && j == 0) ? 2 : 0;
      if (sym - sym_shifted != want) return false;
    }
  return true;
}

}  // namespace ccc
