#pragma once

#include <utility>

#include "ccc/matrix.hpp"
#include "ccc/tait.hpp"

namespace ccc {

/// Goeritz matrix of the checkerboard surface built from `surface_color`
/// faces: indexed by the opposite-color faces minus the one with smallest id.
/// Off-diagonal (i,j) = -sum of eta over crossings joining faces i and j;
/// diagonals make the pre-deletion row sums zero.
SymIntMatrix goeritz_matrix(const FaceColoring& c, FaceColor surface_color);

/// |det| of the Goeritz matrix, computed from both checkerboard surfaces;
/// throws internal_inconsistency if the two disagree. Empty matrix -> 1.
Int determinant_link(const LinkDiagram& d);

enum class Definiteness { positive, negative, indefinite_or_degenerate };

const char* to_string(Definiteness d);

/// Decided by exact leading principal minors; a zero minor falls back to
/// congruence diagonalization. The empty matrix counts as definite (reported
/// positive by convention).
Definiteness is_definite(const SymIntMatrix& m);

/// Signature and nullity over Q, by fraction-free congruence diagonalization.
std::pair<int, int> signature_nullity(const SymIntMatrix& m);

struct SurfaceStats {
  int chi = 0;
  int b0 = 1;
  int b1 = 0;
  bool orientable = false;
  int boundary_components = 0;
};

/// chi = (#surface-color faces) - (#crossings); b1 = 1 - chi for the connected
/// surface of a connected diagram.
SurfaceStats surface_stats(const FaceColoring& c, FaceColor surface_color);

/// For a knot diagram exhibiting a definite orientable compatible checkerboard
/// surface: b1 of that surface, which equals 2g and |sigma|. Throws
/// not_applicable when no such surface is exhibited.
int genus_from_definite(const LinkDiagram& d);

}  // namespace ccc
