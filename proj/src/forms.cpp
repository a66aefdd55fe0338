#include "ccc/forms.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

namespace ccc {

const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::positive: return "positive";
    case Definiteness::negative: return "negative";
    case Definiteness::indefinite_or_degenerate: return "indefinite-or-degenerate";
  }
  return "?";
}

SymIntMatrix goeritz_matrix(const FaceColoring& c, FaceColor surface_color) {
  const FaceColor white = opposite(surface_color);
  std::vector<int> wfaces;
  for (int f = 0; f < c.n_faces; ++f)
    if (c.color[f] == white) wfaces.push_back(f);
  if (wfaces.empty()) fail(ErrorKind::internal_inconsistency, "no faces opposite the surface color");

  std::map<int, int> idx;
  for (size_t k = 0; k < wfaces.size(); ++k) idx[wfaces[k]] = static_cast<int>(k);

  const int full = static_cast<int>(wfaces.size());
  IntMatrix pre(full, full);
  for (int x = 0; x < c.n_crossings; ++x) {
    const bool surface_q13 = (c.color[c.face_of(x, 1)] == surface_color);
    const int eta = surface_q13 ? +1 : -1;
    const int qa = surface_q13 ? 0 : 1;  // the opposite-color quadrant pair
    const int i = idx.at(c.face_of(x, qa));
    const int j = idx.at(c.face_of(x, qa + 2));
    if (i != j) {
      pre.at(i, j) -= eta;
      pre.at(j, i) -= eta;
    }
  }
  for (int i = 0; i < full; ++i) {
    Int s = 0;
    for (int j = 0; j < full; ++j)
      if (j != i) s += pre.at(i, j);
    pre.at(i, i) = -s;
  }

  // delete the row/column of the smallest face id (wfaces is ascending)
  SymIntMatrix g(full - 1);
  for (int i = 1; i < full; ++i) {
    g.labels.push_back("f" + std::to_string(wfaces[i]));
    for (int j = 1; j < full; ++j) g.at(i - 1, j - 1) = pre.at(i, j);
  }
  return g;
}

Int determinant_link(const LinkDiagram& d) {
  const auto [c0, c1] = checkerboard(d);
  (void)c1;
  Int a = abs(det(goeritz_matrix(c0, FaceColor::shaded)));
  Int b = abs(det(goeritz_matrix(c0, FaceColor::white)));
  if (a != b)
    fail(ErrorKind::internal_inconsistency,
         "checkerboard determinants disagree: " + a.str() + " vs " + b.str());
  return a;
}

namespace {

Int leading_minor(const SymIntMatrix& m, int k) {
  IntMatrix sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(i, j);
  return det(sub);
}

}  // namespace

Definiteness is_definite(const SymIntMatrix& m) {
  if (m.n == 0) return Definiteness::positive;  // definite by convention, rank 0
  bool all_pos = true, alternating = true, zero_seen = false;
  for (int k = 1; k <= m.n; ++k) {
    const Int mk = leading_minor(m, k);
    if (mk == 0) {
      zero_seen = true;
      break;
    }
    if (mk < 0) all_pos = false;
    if ((k % 2 == 1) != (mk < 0)) alternating = false;  // want sign (-1)^k
  }
  if (!zero_seen) {
    if (all_pos) return Definiteness::positive;
    if (alternating) return Definiteness::negative;
    return Definiteness::indefinite_or_degenerate;
  }
  // inconclusive minor test: re-check by congruence diagonalization
  const auto [sig, nul] = signature_nullity(m);
  if (nul == 0 && sig == m.n) return Definiteness::positive;
  if (nul == 0 && sig == -m.n) return Definiteness::negative;
  return Definiteness::indefinite_or_degenerate;
}

std::pair<int, int> signature_nullity(const SymIntMatrix& m) {
  const int n = m.n;
  std::vector<Rational> w(static_cast<size_t>(n) * n);
  for (size_t k = 0; k < m.a.size(); ++k) w[k] = Rational(m.a[k]);
  const auto at = [&](int i, int j) -> Rational& { return w[static_cast<size_t>(i) * n + j]; };

  int pos = 0, neg = 0, zero = 0;
  for (int k = 0; k < n; ++k) {
    if (at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n && piv < 0; ++i)
        if (at(i, i) != 0) piv = i;
      if (piv >= 0) {
        for (int j = k; j < n; ++j) std::swap(at(k, j), at(piv, j));
        for (int i = k; i < n; ++i) std::swap(at(i, k), at(i, piv));
      } else {
        int oi = -1, oj = -1;
        for (int i = k; i < n && oi < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (at(i, j) != 0) {
              oi = i;
              oj = j;
              break;
            }
        if (oi < 0) {
          zero += n - k;
          break;
        }
        // make a nonzero diagonal entry: row/col i += row/col j
        for (int j2 = k; j2 < n; ++j2) at(oi, j2) += at(oj, j2);
        for (int i2 = k; i2 < n; ++i2) at(i2, oi) += at(i2, oj);
        if (oi != k) {
          for (int j2 = k; j2 < n; ++j2) std::swap(at(k, j2), at(oi, j2));
          for (int i2 = k; i2 < n; ++i2) std::swap(at(i2, k), at(i2, oi));
        }
      }
    }
    const Rational pivot = at(k, k);
    if (pivot > 0) ++pos;
    else ++neg;
    for (int i = k + 1; i < n; ++i) {
      if (at(i, k) == 0) continue;
      const Rational f = at(i, k) / pivot;
      for (int j = k; j < n; ++j) at(i, j) -= f * at(k, j);
      for (int j2 = k; j2 < n; ++j2) at(j2, i) -= f * at(j2, k);
    }
  }
  return {pos - neg, zero};
}

SurfaceStats surface_stats(const FaceColoring& c, FaceColor surface_color) {
  SurfaceStats s;
  s.chi = c.count(surface_color) - c.n_crossings;
  s.b0 = 1;  // connected diagram gives a connected surface
  s.b1 = 1 - s.chi;
  s.orientable = is_bipartite(tait_graph(c, surface_color)).bipartite;
  s.boundary_components = c.n_components;
  return s;
}

int genus_from_definite(const LinkDiagram& d) {
  if (d.num_components != 1)
    fail(ErrorKind::not_applicable, "genus bound is stated for knots");
  const SpecialStructure s = special_structure(d);
  if (!s.found || !s.compatible)
    fail(ErrorKind::not_applicable, "no orientation-compatible orientable checkerboard surface");
  const auto [c0, c1] = checkerboard(d);
  const SymIntMatrix g = goeritz_matrix(s.coloring_index == 0 ? c0 : c1, FaceColor::shaded);
  if (is_definite(g) == Definiteness::indefinite_or_degenerate)
    fail(ErrorKind::not_applicable, "the exhibited Seifert surface is not definite");
  return g.n;
}

}  // namespace ccc
