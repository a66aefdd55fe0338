#include "ccc/tait.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace ccc {

int FaceColoring::count(FaceColor c) const {
  int k = 0;
  for (FaceColor f : color) k += (f == c);
  return k;
}

FaceColoring FaceColoring::swapped() const {
  FaceColoring s = *this;
  for (FaceColor& f : s.color) f = opposite(f);
  return s;
}

std::pair<FaceColoring, FaceColoring> checkerboard(const LinkDiagram& d) {
  FaceColoring c;
  c.n_crossings = d.num_crossings();
  c.n_components = d.num_components;
  c.face_list = faces(d);  // rejects disconnected diagrams
  c.n_faces = static_cast<int>(c.face_list.size());
  c.color.assign(c.n_faces, FaceColor::white);

  if (d.is_unknot()) {
    c.color[0] = FaceColor::shaded;  // the circle's left side
    return {c, c.swapped()};
  }

  c.corner_face.assign(static_cast<size_t>(c.n_crossings) * 4, -1);
  c.arc_left_face.assign(d.arcs.size(), -1);
  c.arc_right_face.assign(d.arcs.size(), -1);
  c.arc_component.resize(d.arcs.size());
  c.arc_label.resize(d.arcs.size());
  for (size_t a = 0; a < d.arcs.size(); ++a) {
    c.arc_component[a] = d.arcs[a].component;
    c.arc_label[a] = d.arcs[a].label;
  }
  for (const Face& f : c.face_list) {
    for (const FaceCorner& q : f.corners)
      c.corner_face[static_cast<size_t>(q.crossing) * 4 + q.quadrant] = f.id;
    for (const auto& [arc, side] : f.boundary)
      (side == Side::left ? c.arc_left_face[arc] : c.arc_right_face[arc]) = f.id;
  }
  for (int v : c.corner_face)
    if (v < 0) fail(ErrorKind::internal_inconsistency, "face traversal missed a corner");

  // 2-color across arcs; the dual graph of a 4-valent diagram admits exactly
  // two checkerboard colorings
  std::vector<int> mark(c.n_faces, -1);
  std::queue<int> q;
  mark[0] = 0;
  q.push(0);
  int seen = 1;
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (size_t a = 0; a < d.arcs.size(); ++a) {
      int l = c.arc_left_face[a], r = c.arc_right_face[a];
      if (l != f && r != f) continue;
      int other = (l == f) ? r : l;
      if (mark[other] < 0) {
        mark[other] = 1 - mark[f];
        q.push(other);
        ++seen;
      } else if (mark[other] == mark[f]) {
        fail(ErrorKind::internal_inconsistency, "faces are not checkerboard colorable");
      }
    }
  }
  if (seen != c.n_faces)
    fail(ErrorKind::internal_inconsistency, "face adjacency is not connected");

  // first coloring shades the face on the left of the lowest-labeled arc
  const int anchor = mark[c.arc_left_face[0]];
  for (int f = 0; f < c.n_faces; ++f)
    c.color[f] = (mark[f] == anchor) ? FaceColor::shaded : FaceColor::white;
  return {c, c.swapped()};
}

TaitGraph tait_graph(const FaceColoring& c, FaceColor color) {
  TaitGraph g;
  g.vertex_color = color;
  for (int f = 0; f < c.n_faces; ++f)
    if (c.color[f] == color) g.vertices.push_back(f);
  for (int x = 0; x < c.n_crossings; ++x) {
    const bool q13 = (c.color[c.face_of(x, 1)] == color);
    const int qa = q13 ? 1 : 0;
    TaitEdge e;
    e.crossing = x;
    e.u = c.face_of(x, qa);
    e.v = c.face_of(x, qa + 2);
    if (e.u > e.v) std::swap(e.u, e.v);
    e.eta = q13 ? +1 : -1;
    g.edges.push_back(e);
  }
  return g;
}

BipartiteResult is_bipartite(const TaitGraph& g) {
  BipartiteResult res;
  std::map<int, int> idx;
  for (size_t k = 0; k < g.vertices.size(); ++k) idx[g.vertices[k]] = static_cast<int>(k);
  const int n = static_cast<int>(g.vertices.size());
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge index)
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const int u = idx.at(g.edges[e].u), v = idx.at(g.edges[e].v);
    if (u == v) {  // a loop is an odd cycle
      res.bipartite = false;
      res.odd_cycle = {g.edges[e].crossing};
      return res;
    }
    adj[u].emplace_back(v, static_cast<int>(e));
    adj[v].emplace_back(u, static_cast<int>(e));
  }

  std::vector<int> part(n, -1), parent(n, -1), parent_edge(n, -1);
  for (int s = 0; s < n; ++s) {
    if (part[s] >= 0) continue;
    part[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (auto [v, e] : adj[u]) {
        if (part[v] < 0) {
          part[v] = 1 - part[u];
          parent[v] = u;
          parent_edge[v] = e;
          q.push(v);
        } else if (part[v] == part[u]) {
          // walk both endpoints up to their common ancestor
          std::vector<int> up_u, up_v;
          std::vector<int> au, av;
          for (int w = u; w >= 0; w = parent[w]) au.push_back(w);
          for (int w = v; w >= 0; w = parent[w]) av.push_back(w);
          size_t iu = au.size(), iv = av.size();
          while (iu > 0 && iv > 0 && au[iu - 1] == av[iv - 1]) {
            --iu;
            --iv;
          }
          res.bipartite = false;
          for (size_t k = 0; k < iu; ++k) res.odd_cycle.push_back(g.edges[parent_edge[au[k]]].crossing);
          res.odd_cycle.push_back(g.edges[e].crossing);
          for (size_t k = iv; k-- > 0;) res.odd_cycle.push_back(g.edges[parent_edge[av[k]]].crossing);
          return res;
        }
      }
    }
  }
  res.bipartite = true;
  for (int k = 0; k < n; ++k) res.part.emplace_back(g.vertices[k], part[k]);
  return res;
}

namespace {

// Boundary-orientation compatibility of the shaded surface of `c`: per arc,
// the induced orientation matches the link orientation iff the shaded face is
// on the arc's left and carries bipartition part 0 (counterclockwise), or
// both conditions flip. Constant along each component; compatible when all
// components agree up to one global surface flip.
bool boundary_compatible(const FaceColoring& c, const BipartiteResult& bip,
                         std::vector<int>& component_match) {
  component_match.assign(c.n_components, 0);
  if (c.arc_left_face.empty()) {  // zero-crossing unknot: a disk
    component_match.assign(c.n_components, +1);
    return true;
  }
  std::map<int, int> part(bip.part.begin(), bip.part.end());
  for (size_t a = 0; a < c.arc_left_face.size(); ++a) {
    const int lf = c.arc_left_face[a], rf = c.arc_right_face[a];
    const bool left_shaded = c.color[lf] == FaceColor::shaded;
    if (left_shaded == (c.color[rf] == FaceColor::shaded))
      fail(ErrorKind::internal_inconsistency, "arc not between opposite colors");
    const int s = left_shaded ? +1 : -1;
    const int p = part.at(left_shaded ? lf : rf) == 0 ? +1 : -1;
    const int eps = s * p;
    int& slot = component_match[c.arc_component[a]];
    if (slot == 0) slot = eps;
    else if (slot != eps)
      fail(ErrorKind::internal_inconsistency, "induced boundary orientation not constant on a component");
  }
  for (int v : component_match)
    if (v != component_match[0]) return false;
  return true;
}

}  // namespace

SpecialStructure special_structure(const LinkDiagram& d) {
  SpecialStructure out;
  const auto [c0, c1] = checkerboard(d);
  const FaceColoring* colorings[2] = {&c0, &c1};

  bool compat[2] = {false, false};
  std::vector<int> match[2];
  for (int k = 0; k < 2; ++k) {
    const BipartiteResult bip = is_bipartite(tait_graph(*colorings[k], FaceColor::shaded));
    out.orientable[k] = bip.bipartite;
    out.odd_cycle[k] = bip.odd_cycle;
    if (bip.bipartite) compat[k] = boundary_compatible(*colorings[k], bip, match[k]);
  }
  for (int k = 0; k < 2; ++k) {
    if (!out.orientable[k]) continue;
    const bool better = !out.found || (compat[k] && !out.compatible);
    if (better) {
      out.found = true;
      out.coloring_index = k;
      out.compatible = compat[k];
      out.component_match = match[k];
    }
  }
  return out;
}

bool is_special_alternating(const LinkDiagram& d) {
  if (!is_alternating(d)) return false;
  const SpecialStructure s = special_structure(d);
  return s.found && s.compatible;
}

}  // namespace ccc
