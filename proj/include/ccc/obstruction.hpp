#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccc/diagram.hpp"
#include "ccc/forms.hpp"
#include "ccc/intlinalg.hpp"

namespace ccc {

enum class LSpaceStatus { auto_alternating, certified_external, unknown };

const char* to_string(LSpaceStatus s);

/// L-space status of the branched double cover is an input certificate, never
/// computed. auto_alternating is permitted only for alternating diagrams.
struct LSpaceCertificate {
  LSpaceStatus status = LSpaceStatus::unknown;
  std::string note;
};

struct Verdict {
  std::string route;
  bool applies = false;
  std::string detail;
};

struct ObstructionReport {
  std::string name;
  int crossings = 0;
  int components = 1;
  bool alternating = false;
  std::optional<int> special;  // coloring id, or nullopt when neither qualifies
  bool special_compatible = false;
  bool surface_orientable[2] = {false, false};  // per checkerboard coloring
  std::vector<int> odd_cycle[2];                // crossing-id witnesses when not
  Int det;
  std::optional<int> signature;  // reported only for a compatible Seifert surface
  std::optional<int> rank;       // rank of that surface's form
  std::optional<int> two_g;      // 2g; surface-derived, or an external datum
  bool two_g_external = false;
  std::vector<Int> invariant_factors;  // nontrivial factors of H1 of the double branched cover
  std::optional<int> m;                // minimal generator count (absent when det = 0)
  bool det_square_free = false;
  LSpaceCertificate lspace;
  bool unknot = false;
  std::vector<Verdict> verdicts;
  bool verified = false;  // some route applies

  const Verdict* route(const std::string& name) const;
};

struct AnalyzeOptions {
  std::string name;
  /// Externally certified 2g datum, used by the m-vs-2g route when the
  /// diagram itself exhibits no definite surface.
  std::optional<int> external_two_g;
};

/// Runs the full pipeline and evaluates the obstruction routes:
///   1. thm-special-alternating  (knots; special alternating diagram)
///   2. thm-definite-lspace      (definite compatible surface + L-space)
///   3. cor-m-equals-2g          (knots; m = 2g + L-space)
///   4. lm-square-free           (knots; square-free determinant + L-space)
ObstructionReport analyze(const LinkDiagram& d, const LSpaceCertificate& cert,
                          const AnalyzeOptions& opts = {});

/// True iff no prime square divides n. Requires n >= 1.
bool is_square_free(const Int& n);

/// For same-shape symmetric matrices differing only at (1,1) by 2: checks that
/// the entry gcds agree and divide 2.
bool delta1_check(const SymIntMatrix& g, const SymIntMatrix& g_shifted);

}  // namespace ccc
