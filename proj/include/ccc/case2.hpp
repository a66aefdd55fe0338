#pragma once

#include <cstdint>

#include "ccc/forms.hpp"
#include "ccc/matrix.hpp"

namespace ccc {

/// A symmetric matrix together with its (1,1)-shift: g'_11 = g_11 - 2, all
/// other entries equal.
struct PerturbationPair {
  SymIntMatrix g;
  SymIntMatrix g_shifted;
};

/// Builds the shifted pair; definiteness is not required here (checked by the
/// downstream verifiers). Throws empty_matrix for n = 0.
PerturbationPair perturb(const SymIntMatrix& g);

/// det(G) - det(G') = 2 * det(G_11), where G_11 deletes row/column 1.
/// Holds for every symmetric integer matrix.
bool verify_laplace_identity(const PerturbationPair& p);

/// For definite G: det(G_11) != 0 (the restriction of a definite form is
/// definite), hence det(G) != det(G'). Throws not_definite otherwise.
bool verify_case2_contradiction(const SymIntMatrix& g);

/// Seeded definite instance generator: B*B^T + I for random integer B with
/// entries in [-magnitude_bound, magnitude_bound], negated with probability
/// 1/2. Definiteness is re-verified before returning.
SymIntMatrix random_definite(int n, std::uint64_t seed, int magnitude_bound);

/// Shifting a Seifert-matrix candidate by v'_11 = v_11 - 1 changes the
/// symmetrization V + V^T by exactly 2 at entry (1,1).
bool verify_seifert_shift(const IntMatrix& v);

}  // namespace ccc
