#pragma once

#include <vector>

#include "ccc/diagram.hpp"

namespace ccc {

enum class FaceColor { shaded, white };

inline FaceColor opposite(FaceColor c) {
  return c == FaceColor::shaded ? FaceColor::white : FaceColor::shaded;
}

/// A checkerboard 2-coloring of the faces, bundled with the face/corner data
/// downstream consumers need. Self-contained and immutable.
struct FaceColoring {
  int n_crossings = 0;
  int n_faces = 0;
  int n_components = 0;
  std::vector<Face> face_list;
  std::vector<FaceColor> color;   // by face id
  std::vector<int> corner_face;   // crossing*4 + quadrant -> face id
  std::vector<int> arc_left_face;
  std::vector<int> arc_right_face;
  std::vector<int> arc_component;
  std::vector<int> arc_label;

  int face_of(int crossing, int quadrant) const {
    return corner_face[static_cast<size_t>(crossing) * 4 + quadrant];
  }
  /// True when the shaded quadrants at the crossing are {Q1, Q3}.
  bool shaded_q13(int crossing) const {
    return color[face_of(crossing, 1)] == FaceColor::shaded;
  }
  /// Incidence number: +1 when rotating the over-strand counterclockwise
  /// sweeps through the shaded quadrants.
  int eta(int crossing) const { return shaded_q13(crossing) ? +1 : -1; }

  int count(FaceColor c) const;

  /// The complementary coloring (shaded and white swapped).
  FaceColoring swapped() const;
};

/// The two complementary checkerboard colorings, deterministically ordered:
/// the first shades the face on the left side of the lowest-labeled arc.
std::pair<FaceColoring, FaceColoring> checkerboard(const LinkDiagram& d);

struct TaitEdge {
  int crossing = -1;
  int u = -1, v = -1;  // face ids of the same color (u <= v; loops allowed)
  int eta = 0;         // +1 when the vertex-color quadrants at the crossing are {Q1, Q3}
};

/// Multigraph with one vertex per face of the given color and one edge per
/// crossing. The two Tait graphs of a diagram are planar duals.
struct TaitGraph {
  FaceColor vertex_color = FaceColor::shaded;
  std::vector<int> vertices;  // face ids, ascending
  std::vector<TaitEdge> edges;
};

TaitGraph tait_graph(const FaceColoring& c, FaceColor color);

struct BipartiteResult {
  bool bipartite = false;
  std::vector<std::pair<int, int>> part;  // (face id, 0/1), valid iff bipartite
  std::vector<int> odd_cycle;             // crossing ids of an odd cycle, valid iff !bipartite
};

/// Bipartiteness with a checkable witness either way (2-coloring or odd cycle).
BipartiteResult is_bipartite(const TaitGraph& g);

struct SpecialStructure {
  bool found = false;        // some checkerboard surface is orientable
  int coloring_index = -1;   // 0 or 1; the shaded class of that coloring is the surface
  bool compatible = false;   // induced boundary orientation matches the link
                             // orientation on every component, up to one global flip
  bool orientable[2] = {false, false};      // per coloring (shaded surface)
  std::vector<int> odd_cycle[2];            // crossing-id witness when not orientable
  std::vector<int> component_match;         // per component: +1 match / -1 anti (chosen coloring)
};

/// Looks for a coloring whose checkerboard surface is orientable (equivalently
/// whose shaded Tait graph is bipartite; each half-twisted band reverses
/// orientation, so odd cycles are the only obstruction) and reports whether
/// the induced boundary orientation matches the link's. Prefers a compatible
/// coloring, then the lower index.
SpecialStructure special_structure(const LinkDiagram& d);

/// Alternating diagram with an orientation-compatible orientable checkerboard
/// surface.
bool is_special_alternating(const LinkDiagram& d);

}  // namespace ccc
