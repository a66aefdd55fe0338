#include "ccc/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace ccc {

namespace {

struct Occurrence {
  int crossing = -1;
  int slot = -1;
};

// Crossing pieces of the underlying 4-valent graph (ignores link components).
int connected_pieces(const LinkDiagram& d) {
  const int n = d.num_crossings();
  if (n == 0) return d.is_unknot() ? 1 : 0;
  std::vector<char> seen(n, 0);
  int pieces = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++pieces;
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    while (!q.empty()) {
      int c = q.front();
      q.pop();
      for (int s = 0; s < 4; ++s) {
        const ArcRec& a = d.arcs[d.crossings[c].arc[s]];
        for (int other : {a.tail_crossing, a.head_crossing}) {
          if (!seen[other]) {
            seen[other] = 1;
            q.push(other);
          }
        }
      }
    }
  }
  return pieces;
}

// Rotation-system face traversal. Works on any (possibly non-planar or
// disconnected) 4-valent map; check_planar compares the orbit count against
// the genus-0 value.
std::vector<Face> trace_faces(const LinkDiagram& d) {
  if (d.is_unknot()) {
    // Two disk faces, no corners; face 0 plays the role of the circle's left side.
    return {Face{0, {}, {}}, Face{1, {}, {}}};
  }
  const int n = d.num_crossings();
  std::vector<char> seen(static_cast<size_t>(n) * 4, 0);  // arrival darts (crossing, slot)
  std::vector<Face> out;
  for (int c0 = 0; c0 < n; ++c0) {
    for (int s0 = 0; s0 < 4; ++s0) {
      if (seen[static_cast<size_t>(c0) * 4 + s0]) continue;
      Face f;
      f.id = static_cast<int>(out.size());
      int c = c0, s = s0;
      do {
        seen[static_cast<size_t>(c) * 4 + s] = 1;
        const int exit = (s + 3) & 3;  // turn left: face stays on the left of travel
        f.corners.push_back({c, exit});
        const int aid = d.crossings[c].arc[exit];
        const ArcRec& a = d.arcs[aid];
        const bool forward = (a.tail_crossing == c && a.tail_slot == exit);
        f.boundary.emplace_back(aid, forward ? Side::left : Side::right);
        if (forward) {
          c = a.head_crossing;
          s = a.head_slot;
        } else {
          c = a.tail_crossing;
          s = a.tail_slot;
        }
      } while (!(c == c0 && s == s0));
      out.push_back(std::move(f));
    }
  }
  return out;
}

void check_planar(const LinkDiagram& d, ErrorKind kind) {
  if (d.is_unknot()) return;
  // traversal orbits per connected piece: F_i = C_i + 2 exactly when genus 0
  const int f = static_cast<int>(trace_faces(d).size());
  const int expect = d.num_crossings() + 2 * connected_pieces(d);
  if (f != expect)
    fail(kind, "no planar realization: face traversal gives " + std::to_string(f) +
                   " faces, a sphere embedding needs " + std::to_string(expect));
}

// Orientation recovery for PD codes: decide in/out roles of the over slots so
// that every label is once a head and once a tail, then check that labels run
// cyclically consecutively along each component.
struct RoleSolver {
  // role per (crossing, slot): +1 head of the arc there (incoming), -1 tail, 0 unknown
  std::vector<int> role;
  const std::vector<std::array<long, 4>>& tuples;
  const std::map<long, std::vector<Occurrence>>& occ;

  RoleSolver(const std::vector<std::array<long, 4>>& t,
             const std::map<long, std::vector<Occurrence>>& o)
      : role(t.size() * 4, 0), tuples(t), occ(o) {}

  int& at(int c, int s) { return role[static_cast<size_t>(c) * 4 + s]; }

  void set(int c, int s, int r, std::queue<Occurrence>& work) {
    int& cur = at(c, s);
    if (cur == r) return;
    if (cur != 0) fail(ErrorKind::invalid_diagram, "inconsistent orientation runs");
    cur = r;
    work.push({c, s});
  }

  void propagate(std::queue<Occurrence>& work) {
    while (!work.empty()) {
      Occurrence o = work.front();
      work.pop();
      const int r = at(o.crossing, o.slot);
      // the label's other occurrence takes the opposite role
      for (const Occurrence& other : occ.at(tuples[o.crossing][o.slot])) {
        if (other.crossing == o.crossing && other.slot == o.slot) continue;
        set(other.crossing, other.slot, -r, work);
      }
      // within one over passage, slots 1 and 3 take opposite roles
      if (o.slot == 1 || o.slot == 3) set(o.crossing, 4 - o.slot, -r, work);
    }
  }
};

LinkDiagram build_unknot() {
  LinkDiagram d;
  d.num_components = 1;
  d.connected = true;
  return d;
}

std::vector<std::array<long, 4>> tokenize_pd(const std::string& text, bool& unknot) {
  unknot = false;
  std::vector<std::array<long, 4>> tuples;
  size_t i = 0;
  const auto skip_sep = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ';'))
      ++i;
  };
  skip_sep();
  if (i == text.size()) fail(ErrorKind::malformed_code, "empty PD code");
  if (text.compare(i, 6, "UNKNOT") == 0) {
    i += 6;
    skip_sep();
    if (i != text.size()) fail(ErrorKind::malformed_code, "trailing input after UNKNOT");
    unknot = true;
    return tuples;
  }
  while (i < text.size()) {
    if (text[i] != 'X') fail(ErrorKind::malformed_code, "expected 'X' at position " + std::to_string(i));
    ++i;
    if (i >= text.size() || text[i] != '(') fail(ErrorKind::malformed_code, "expected '(' after X");
    ++i;
    std::array<long, 4> t{};
    for (int k = 0; k < 4; ++k) {
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) fail(ErrorKind::malformed_code, "expected arc label in X(...)");
      try {
        t[k] = std::stol(text.substr(start, i - start));
      } catch (const std::out_of_range&) {
        fail(ErrorKind::malformed_code, "arc label out of range");
      }
      if (t[k] <= 0) fail(ErrorKind::malformed_code, "arc labels must be positive");
      const char want = (k == 3) ? ')' : ',';
      if (i >= text.size() || text[i] != want)
        fail(ErrorKind::malformed_code, std::string("expected '") + want + "' in X(...)");
      ++i;
    }
    tuples.push_back(t);
    skip_sep();
  }
  return tuples;
}

LinkDiagram assemble(const std::vector<std::array<long, 4>>& tuples,
                     const std::vector<int>& role) {
  const int n = static_cast<int>(tuples.size());

  // arcs indexed in ascending label order
  std::map<long, int> arc_index;
  for (const auto& t : tuples)
    for (long l : t) arc_index.emplace(l, 0);
  {
    int k = 0;
    for (auto& [label, idx] : arc_index) idx = k++;
  }

  LinkDiagram d;
  d.crossings.resize(n);
  d.arcs.resize(arc_index.size());
  for (auto& [label, idx] : arc_index) d.arcs[idx].label = static_cast<int>(label);

  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      const int aid = arc_index.at(tuples[c][s]);
      d.crossings[c].arc[s] = aid;
      ArcRec& a = d.arcs[aid];
      if (role[static_cast<size_t>(c) * 4 + s] > 0) {
        if (a.head_crossing >= 0) fail(ErrorKind::invalid_diagram, "inconsistent orientation runs");
        a.head_crossing = c;
        a.head_slot = s;
      } else {
        if (a.tail_crossing >= 0) fail(ErrorKind::invalid_diagram, "inconsistent orientation runs");
        a.tail_crossing = c;
        a.tail_slot = s;
      }
    }
    d.crossings[c].over_in_slot = role[static_cast<size_t>(c) * 4 + 1] > 0 ? 1 : 3;
    d.crossings[c].sign = d.crossings[c].over_in_slot == 3 ? +1 : -1;
  }
  for (const ArcRec& a : d.arcs)
    if (a.head_crossing < 0 || a.tail_crossing < 0)
      fail(ErrorKind::invalid_diagram, "inconsistent orientation runs");

  // successor along the strand: the out-arc of the passage where this arc ends
  const auto successor = [&](int aid) {
    const ArcRec& a = d.arcs[aid];
    const CrossingRec& x = d.crossings[a.head_crossing];
    const int out_slot = (a.head_slot == 0) ? 2 : (a.head_slot == 2 ? 0 : 4 - a.head_slot);
    // head at slot 0 means the under passage continues to slot 2; head at an
    // over slot continues to the other over slot
    if (a.head_slot == 2 || (a.head_slot != 0 && out_slot == x.over_in_slot))
      fail(ErrorKind::internal_inconsistency, "successor walked against orientation");
    return x.arc[out_slot];
  };

  // decompose into components and validate consecutive cyclic label runs
  std::vector<int> comp(d.arcs.size(), -1);
  int n_comp = 0;
  for (int start = 0; start < static_cast<int>(d.arcs.size()); ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> cycle;
    int cur = start;
    while (comp[cur] < 0) {
      comp[cur] = n_comp;
      cycle.push_back(cur);
      cur = successor(cur);
    }
    if (cur != start) fail(ErrorKind::invalid_diagram, "orientation runs do not close up");
    long lo = d.arcs[cycle[0]].label, hi = lo;
    for (int aid : cycle) {
      lo = std::min(lo, static_cast<long>(d.arcs[aid].label));
      hi = std::max(hi, static_cast<long>(d.arcs[aid].label));
    }
    if (hi - lo + 1 != static_cast<long>(cycle.size()))
      fail(ErrorKind::invalid_diagram, "component labels are not consecutive");
    // traversal from lo must read lo, lo+1, ..., hi
    size_t at_lo = 0;
    while (d.arcs[cycle[at_lo]].label != lo) ++at_lo;
    for (size_t k = 0; k < cycle.size(); ++k) {
      long want = lo + static_cast<long>(k);
      if (d.arcs[cycle[(at_lo + k) % cycle.size()]].label != want)
        fail(ErrorKind::invalid_diagram, "labels do not increase along the component");
    }
    ++n_comp;
  }
  for (size_t i = 0; i < d.arcs.size(); ++i) d.arcs[i].component = comp[i];
  d.num_components = n_comp;
  d.connected = connected_pieces(d) == 1;
  return d;
}

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
  bool unknot = false;
  const auto tuples = tokenize_pd(text, unknot);
  if (unknot) return build_unknot();

  std::map<long, std::vector<Occurrence>> occ;
  for (int c = 0; c < static_cast<int>(tuples.size()); ++c)
    for (int s = 0; s < 4; ++s) occ[tuples[c][s]].push_back({c, s});
  for (const auto& [label, where] : occ)
    if (where.size() != 2)
      fail(ErrorKind::invalid_diagram,
           "arc label " + std::to_string(label) + " occurs " + std::to_string(where.size()) +
               " times (want exactly 2)");

  RoleSolver solver(tuples, occ);
  std::queue<Occurrence> work;
  for (int c = 0; c < static_cast<int>(tuples.size()); ++c) {
    solver.set(c, 0, +1, work);  // incoming under-strand
    solver.set(c, 2, -1, work);  // outgoing under-strand
  }
  solver.propagate(work);

  // Components that never go under leave their over passages unresolved;
  // fall back to the label rule (out = in + 1, or a wrap from max to min).
  for (int c = 0; c < static_cast<int>(tuples.size()); ++c) {
    if (solver.at(c, 1) != 0) continue;
    const long b = tuples[c][1], dd = tuples[c][3];
    int in_slot;
    if (dd == b + 1) in_slot = 1;
    else if (b == dd + 1) in_slot = 3;
    else if (b > dd) in_slot = 1;  // wrap: max -> min
    else in_slot = 3;
    solver.set(c, in_slot, +1, work);
    solver.propagate(work);
  }

  LinkDiagram d = assemble(tuples, solver.role);
  check_planar(d, ErrorKind::invalid_diagram);
  return d;
}

LinkDiagram parse_gauss(const std::string& text) {
  struct Pass {
    int crossing;  // internal index
    bool over;
  };
  std::vector<std::vector<Pass>> comps;
  std::map<long, int> ids;          // external id -> internal index
  std::vector<int> declared_sign;   // by internal index
  std::vector<std::array<int, 2>> visits;  // per crossing: o-count, u-count

  size_t i = 0;
  std::vector<Pass> cur;
  bool any_token = false;
  const auto flush = [&] {
    if (cur.empty()) fail(ErrorKind::malformed_code, "empty component in Gauss code");
    comps.push_back(std::move(cur));
    cur.clear();
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == '/') {
      if (!any_token) fail(ErrorKind::malformed_code, "component separator before any token");
      flush();
      ++i;
      continue;
    }
    if (ch != 'o' && ch != 'u')
      fail(ErrorKind::malformed_code, std::string("expected o/u token, got '") + ch + "'");
    ++i;
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail(ErrorKind::malformed_code, "expected crossing id after o/u");
    long ext = 0;
    try {
      ext = std::stol(text.substr(start, i - start));
    } catch (const std::out_of_range&) {
      fail(ErrorKind::malformed_code, "crossing id out of range");
    }
    if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
      fail(ErrorKind::malformed_code, "expected sign after crossing id");
    const int sgn = text[i] == '+' ? +1 : -1;
    ++i;
    auto [it, fresh] = ids.emplace(ext, static_cast<int>(ids.size()));
    if (fresh) {
      declared_sign.push_back(sgn);
      visits.push_back({0, 0});
    } else if (declared_sign[it->second] != sgn) {
      fail(ErrorKind::malformed_code,
           "conflicting signs for crossing " + std::to_string(ext));
    }
    ++visits[it->second][ch == 'o' ? 0 : 1];
    cur.push_back({it->second, ch == 'o'});
    any_token = true;
  }
  if (!any_token) fail(ErrorKind::malformed_code, "empty Gauss code");
  flush();
  for (size_t k = 0; k < visits.size(); ++k)
    if (visits[k][0] != 1 || visits[k][1] != 1)
      fail(ErrorKind::malformed_code, "each crossing needs exactly one o and one u visit");

  const int n = static_cast<int>(ids.size());
  LinkDiagram d;
  d.crossings.resize(n);
  for (int c = 0; c < n; ++c) {
    d.crossings[c].sign = declared_sign[c];
    d.crossings[c].over_in_slot = declared_sign[c] > 0 ? 3 : 1;
  }

  // Arcs run between consecutive passages; labels count up along each component.
  int next_label = 1;
  for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
    const auto& seq = comps[ci];
    const int len = static_cast<int>(seq.size());
    const int base = static_cast<int>(d.arcs.size());
    for (int k = 0; k < len; ++k) {
      ArcRec a;
      a.label = next_label++;
      a.component = ci;
      d.arcs.push_back(a);
    }
    for (int k = 0; k < len; ++k) {
      // arc (base + k) runs from passage k to passage k+1 (cyclically)
      const Pass from = seq[k];
      const Pass to = seq[(k + 1) % len];
      const int aid = base + k;
      const auto out_slot = [&](const Pass& p) {
        const CrossingRec& x = d.crossings[p.crossing];
        if (!p.over) return 2;
        return x.over_in_slot == 3 ? 1 : 3;
      };
      const auto in_slot = [&](const Pass& p) {
        const CrossingRec& x = d.crossings[p.crossing];
        if (!p.over) return 0;
        return x.over_in_slot;
      };
      d.arcs[aid].tail_crossing = from.crossing;
      d.arcs[aid].tail_slot = out_slot(from);
      d.arcs[aid].head_crossing = to.crossing;
      d.arcs[aid].head_slot = in_slot(to);
      d.crossings[from.crossing].arc[d.arcs[aid].tail_slot] = aid;
      d.crossings[to.crossing].arc[d.arcs[aid].head_slot] = aid;
    }
  }
  for (const CrossingRec& x : d.crossings)
    for (int s = 0; s < 4; ++s)
      if (x.arc[s] < 0) fail(ErrorKind::internal_inconsistency, "unfilled crossing slot");

  d.num_components = static_cast<int>(comps.size());
  d.connected = connected_pieces(d) == 1;
  check_planar(d, ErrorKind::non_realizable);
  return d;
}

std::string to_pd_string(const LinkDiagram& d) {
  if (d.is_unknot()) return "UNKNOT";
  std::ostringstream os;
  for (size_t c = 0; c < d.crossings.size(); ++c) {
    if (c) os << ";";
    os << "X(";
    for (int s = 0; s < 4; ++s) os << (s ? "," : "") << d.arcs[d.crossings[c].arc[s]].label;
    os << ")";
  }
  return os.str();
}

std::string to_gauss_string(const LinkDiagram& d) {
  if (d.is_unknot())
    fail(ErrorKind::not_applicable, "the zero-crossing unknot has no Gauss code");
  // walk each component from its lowest-labeled arc; number crossings by first visit
  std::vector<int> rename(d.crossings.size(), 0);
  int next_id = 1;
  std::ostringstream os;
  std::vector<int> first_arc(d.num_components, -1);
  for (int a = 0; a < d.num_arcs(); ++a) {
    int& f = first_arc[d.arcs[a].component];
    if (f < 0 || d.arcs[a].label < d.arcs[f].label) f = a;
  }
  for (int comp = 0; comp < d.num_components; ++comp) {
    if (comp) os << " / ";
    int aid = first_arc[comp];
    bool first = true;
    do {
      // emit the passage at this arc's tail, so a re-parse reproduces labels
      const ArcRec& a = d.arcs[aid];
      const CrossingRec& tail = d.crossings[a.tail_crossing];
      const bool over = (a.tail_slot != 2);
      if (rename[a.tail_crossing] == 0) rename[a.tail_crossing] = next_id++;
      if (!first) os << " ";
      first = false;
      os << (over ? 'o' : 'u') << rename[a.tail_crossing] << (tail.sign > 0 ? '+' : '-');
      const CrossingRec& head = d.crossings[a.head_crossing];
      const int out_slot = (a.head_slot == 0) ? 2 : (head.over_in_slot == 3 ? 1 : 3);
      aid = head.arc[out_slot];
    } while (aid != first_arc[comp]);
  }
  return os.str();
}

std::vector<Face> faces(const LinkDiagram& d) {
  if (!d.connected)
    fail(ErrorKind::disconnected_diagram,
         "face traversal requires a connected diagram; analyze split components separately");
  return trace_faces(d);
}

bool is_alternating(const LinkDiagram& d) {
  if (d.is_unknot()) return true;
  std::vector<int> first_arc(d.num_components, -1);
  for (int a = 0; a < d.num_arcs(); ++a) {
    int& f = first_arc[d.arcs[a].component];
    if (f < 0 || d.arcs[a].label < d.arcs[f].label) f = a;
  }
  for (int comp = 0; comp < d.num_components; ++comp) {
    int aid = first_arc[comp];
    int prev_over = -1, prev_crossing = -1;
    int first_over = -1, first_crossing = -1;
    do {
      const ArcRec& a = d.arcs[aid];
      const CrossingRec& x = d.crossings[a.head_crossing];
      const bool over = (a.head_slot != 0);
      if (prev_over == static_cast<int>(over)) return false;
      if (prev_crossing == a.head_crossing) return false;  // kink
      if (first_over < 0) {
        first_over = over;
        first_crossing = a.head_crossing;
      }
      prev_over = over;
      prev_crossing = a.head_crossing;
      const int out_slot = over ? (x.over_in_slot == 3 ? 1 : 3) : 2;
      aid = x.arc[out_slot];
    } while (aid != first_arc[comp]);
    // close the cycle
    if (prev_over == first_over) return false;
    if (prev_crossing == first_crossing) return false;
  }
  return true;
}

std::vector<int> crossing_signs(const LinkDiagram& d) {
  std::vector<int> s;
  s.reserve(d.crossings.size());
  for (const CrossingRec& x : d.crossings) s.push_back(x.sign);
  return s;
}

LinkDiagram mirrored(const LinkDiagram& d) {
  if (d.is_unknot()) return d;
  LinkDiagram m = d;
  for (size_t c = 0; c < d.crossings.size(); ++c) {
    const int r = d.crossings[c].over_in_slot;  // old over-in becomes the new under-in
    for (int s = 0; s < 4; ++s) m.crossings[c].arc[s] = d.crossings[c].arc[(s + r) & 3];
    m.crossings[c].over_in_slot = (4 - r) & 3;  // old under-in, seen from the new slot 0
    m.crossings[c].sign = -d.crossings[c].sign;
  }
  for (size_t a = 0; a < d.arcs.size(); ++a) {
    const int tc = d.arcs[a].tail_crossing, hc = d.arcs[a].head_crossing;
    m.arcs[a].tail_slot = (d.arcs[a].tail_slot - d.crossings[tc].over_in_slot + 4) & 3;
    m.arcs[a].head_slot = (d.arcs[a].head_slot - d.crossings[hc].over_in_slot + 4) & 3;
  }
  return m;
}

LinkDiagram reversed(const LinkDiagram& d) {
  if (d.is_unknot()) return d;
  LinkDiagram r = d;
  for (size_t c = 0; c < d.crossings.size(); ++c) {
    for (int s = 0; s < 4; ++s) r.crossings[c].arc[s] = d.crossings[c].arc[(s + 2) & 3];
    r.crossings[c].over_in_slot = d.crossings[c].over_in_slot;  // rotation by 2 fixes parity
    r.crossings[c].sign = d.crossings[c].sign;
  }
  // per component, labels lo..hi reverse to lo + (hi - old)
  std::vector<int> lo(d.num_components, 0), hi(d.num_components, 0);
  std::vector<char> seen(d.num_components, 0);
  for (const ArcRec& a : d.arcs) {
    if (!seen[a.component]) {
      lo[a.component] = hi[a.component] = a.label;
      seen[a.component] = 1;
    } else {
      lo[a.component] = std::min(lo[a.component], a.label);
      hi[a.component] = std::max(hi[a.component], a.label);
    }
  }
  for (size_t a = 0; a < d.arcs.size(); ++a) {
    r.arcs[a].label = lo[d.arcs[a].component] + (hi[d.arcs[a].component] - d.arcs[a].label);
    r.arcs[a].tail_crossing = d.arcs[a].head_crossing;
    r.arcs[a].tail_slot = (d.arcs[a].head_slot + 2) & 3;
    r.arcs[a].head_crossing = d.arcs[a].tail_crossing;
    r.arcs[a].head_slot = (d.arcs[a].tail_slot + 2) & 3;
  }
  // keep arcs sorted by label
  std::vector<int> order(r.arcs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return r.arcs[x].label < r.arcs[y].label; });
  std::vector<int> inv(order.size());
  for (size_t k = 0; k < order.size(); ++k) inv[order[k]] = static_cast<int>(k);
  std::vector<ArcRec> sorted;
  sorted.reserve(r.arcs.size());
  for (int idx : order) sorted.push_back(r.arcs[idx]);
  r.arcs = std::move(sorted);
  for (CrossingRec& x : r.crossings)
    for (int s = 0; s < 4; ++s) x.arc[s] = inv[x.arc[s]];
  return r;
}

}  // namespace ccc
