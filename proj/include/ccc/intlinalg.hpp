#pragma once

#include <vector>

#include "ccc/matrix.hpp"

namespace ccc {

/// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... | dr,
/// entries non-negative.
struct SNFResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;

  std::vector<Int> diagonal() const;
};

/// Smith normal form over Z. Pivot rule: smallest nonzero |entry|, ties by
/// row-major position. The factorization U*A*V = D is re-verified by
/// multiplication before returning.
SNFResult smith_normal_form(const IntMatrix& m);

struct InvariantFactors {
  std::vector<Int> factors;  // the nontrivial invariant factors (> 1), ascending
  int m = 0;                 // their count
};

/// Invariant factors via gcds of i-by-i minors (independent of the Smith
/// normal form route). Guarded to n <= 6; throws singular for det = 0.
InvariantFactors invariant_factors_minors(const IntMatrix& a);

/// Nontrivial invariant factors read off the Smith normal form diagonal.
InvariantFactors invariant_factors_snf(const IntMatrix& a);

/// Minimal number of generators of the finite abelian group presented by a
/// nonsingular square matrix: the count of Smith diagonal entries > 1.
int min_generators(const IntMatrix& a);

}  // namespace ccc
