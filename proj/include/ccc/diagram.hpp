#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ccc/errors.hpp"

namespace ccc {

// A crossing stores its four arc-ends in counterclockwise order; slot 0 is the
// incoming under-strand, so the under-strand runs slot 0 -> slot 2 and the
// over-strand occupies slots 1 and 3.
struct CrossingRec {
  std::array<int, 4> arc{-1, -1, -1, -1};  // arc ids by slot
  int over_in_slot = 3;                    // 1 or 3
  int sign = 0;                            // +1 iff over_in_slot == 3
};

struct ArcRec {
  int label = 0;  // user-facing label; cyclic-consecutive along each component
  int tail_crossing = -1, tail_slot = -1;
  int head_crossing = -1, head_slot = -1;
  int component = 0;
};

/// Oriented combinatorial link diagram in S^2. A zero-crossing unknot has no
/// crossings and no arcs. Immutable after construction.
struct LinkDiagram {
  std::vector<CrossingRec> crossings;
  std::vector<ArcRec> arcs;  // ascending by label
  int num_components = 1;
  bool connected = true;

  bool is_unknot() const { return crossings.empty(); }
  int num_crossings() const { return static_cast<int>(crossings.size()); }
  int num_arcs() const { return static_cast<int>(arcs.size()); }
};

enum class Side { left, right };

struct FaceCorner {
  int crossing = -1;
  int quadrant = -1;  // quadrant q lies between slots q and q+1 (mod 4)
};

struct Face {
  int id = -1;
  std::vector<std::pair<int, Side>> boundary;  // (arc id, side), in traversal order
  std::vector<FaceCorner> corners;
};

/// Parses a PD code: `X(a,b,c,d)` entries separated by `;` or whitespace, or
/// the token `UNKNOT`. Tuple entries are counterclockwise from the incoming
/// under-strand; orientation is recovered from increasing arc labels.
LinkDiagram parse_pd(const std::string& text);

/// Parses a signed Gauss code: `(o|u)<int>(+|-)` tokens, components separated
/// by `/`. Rejects codes with no planar realization.
LinkDiagram parse_gauss(const std::string& text);

std::string to_pd_string(const LinkDiagram& d);

/// Serializes to a signed Gauss code with crossings numbered 1..n in order of
/// first visit. Not defined for the zero-crossing unknot.
std::string to_gauss_string(const LinkDiagram& d);

/// Faces of the diagram complement via rotation-system traversal; requires a
/// connected diagram. |faces| = crossings + 2.
std::vector<Face> faces(const LinkDiagram& d);

/// True iff the over/under pattern strictly alternates along every component.
/// A crossing visited twice in a row (a kink) counts as non-alternating.
bool is_alternating(const LinkDiagram& d);

/// Right-hand-rule crossing signs, indexed by crossing id.
std::vector<int> crossing_signs(const LinkDiagram& d);

/// Same diagram with every crossing switched (over/under swapped).
LinkDiagram mirrored(const LinkDiagram& d);

/// Same diagram with every component's orientation reversed (arcs relabeled
/// to keep labels increasing along each component).
LinkDiagram reversed(const LinkDiagram& d);

}  // namespace ccc
