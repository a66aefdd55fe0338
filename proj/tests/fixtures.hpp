#pragma once

#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ccc/diagram.hpp"

namespace fixtures {

// Left-handed trefoil (all crossings -1 under the right-hand rule).
inline const char* kTrefoilPD = "X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)";
// Its mirror: all crossings +1.
inline const char* kTrefoilMirrorPD = "X(4,2,5,1);X(6,4,1,3);X(2,6,3,5)";
inline const char* kTrefoilGaussPlus = "o1+ u2+ o3+ u1+ o2+ u3+";

// Standard alternating figure-eight diagram (two + and two - crossings).
inline const char* kFig8PD = "X(5,1,6,8);X(1,5,2,4);X(7,2,8,3);X(3,6,4,7)";
inline const char* kFig8Gauss = "o1+ u2+ o3- u4- o2+ u1+ o4- u3-";

// 9_46 as the (3,3,-3) pretzel: det 9, H1 of the double branched cover is
// Z/3 + Z/3, genus-one orientable checkerboard surface with indefinite form.
inline const char* k946PD =
    "X(18,12,1,11);X(10,2,11,1);X(2,10,3,9);X(3,14,4,15);X(13,4,14,5);"
    "X(5,12,6,13);X(17,6,18,7);X(7,16,8,17);X(15,8,16,9)";
inline const char* k946Gauss =
    "u1+ o2+ u3+ u6- o5- u4- o7- u8- o9- o3+ u2+ o1+ o4- u5- o6- u9- o8- u7-";

// (3,3,3) pretzel = 9_35: alternating, det 27, factors (3,9).
inline const char* kP333PD =
    "X(11,18,12,1);X(1,10,2,11);X(9,2,10,3);X(3,14,4,15);X(13,4,14,5);"
    "X(5,12,6,13);X(17,6,18,7);X(7,16,8,17);X(15,8,16,9)";

// (5,3,3) pretzel: alternating, det 39.
inline const char* kP533PD =
    "X(15,22,16,1);X(1,14,2,15);X(13,2,14,3);X(3,12,4,13);X(11,4,12,5);"
    "X(5,18,6,19);X(17,6,18,7);X(7,16,8,17);X(21,8,22,9);X(9,20,10,21);X(19,10,20,11)";

// Mixed-sign (5,3,-3)-type pretzel: non-alternating, det 9, indefinite
// genus-one surface, H1 = Z/9 (m = 1). No obstruction route applies.
inline const char* kP533mPD =
    "X(15,22,16,1);X(1,14,2,15);X(13,2,14,3);X(3,12,4,13);X(11,4,12,5);"
    "X(18,6,19,5);X(6,18,7,17);X(16,8,17,7);X(21,8,22,9);X(9,20,10,21);X(19,10,20,11)";

inline const char* kKinkPlusPD = "X(1,1,2,2)";   // one-crossing unknot, sign +1
inline const char* kKinkMinusPD = "X(1,2,2,1)";  // sign -1

inline const char* kHopfPD = "X(2,3,1,4);X(3,2,4,1)";
inline const char* kTorus24PD = "X(4,5,1,8);X(5,2,6,1);X(2,7,3,6);X(7,4,8,3)";

// Two-component diagram whose orientable checkerboard surface induces
// mismatched boundary orientations (special structure found, not compatible).
inline const char* kIncompatibleGauss = "u1+ u2+ o3+ o1+ / u3+ o2+";

// Genus-one chord diagram that admits no planar realization with these signs.
inline const char* kNonRealizableGauss = "o1+ u2- o3+ u1+ o2- u3+";

/// Signed Gauss code of the (2,n) torus link: the closure of an n-crossing
/// 2-braid, both strands passing every crossing with alternating over/under.
inline std::string torus2_gauss(int n, char sgn = '+') {
  std::ostringstream os;
  if (n % 2 == 1) {
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 1; i <= n; ++i) {
        const bool under = ((i + pass) % 2) == 1;
        os << (pass + i > 1 ? " " : "") << (under ? 'u' : 'o') << i << sgn;
      }
  } else {
    for (int i = 1; i <= n; ++i) os << (i > 1 ? " " : "") << (i % 2 ? 'u' : 'o') << i << sgn;
    os << " / ";
    for (int i = 1; i <= n; ++i) os << (i > 1 ? " " : "") << (i % 2 ? 'o' : 'u') << i << sgn;
  }
  return os.str();
}

inline ccc::LinkDiagram torus2(int n, char sgn = '+') {
  return ccc::parse_gauss(torus2_gauss(n, sgn));
}

/// Random one-component signed Gauss code, rejection-sampled until it
/// realizes in the sphere. Deterministic for a fixed generator state.
inline ccc::LinkDiagram random_knot(std::mt19937_64& rng, int min_crossings = 2,
                                    int max_crossings = 8) {
  for (;;) {
    const int n =
        min_crossings + static_cast<int>(rng() % static_cast<unsigned>(max_crossings - min_crossings + 1));
    std::vector<int> pos(2 * n);
    for (int i = 0; i < 2 * n; ++i) pos[i] = i;
    for (int i = 2 * n - 1; i > 0; --i) std::swap(pos[i], pos[rng() % (i + 1)]);
    std::vector<std::pair<int, bool>> at(2 * n);
    for (int k = 0; k < n; ++k) {
      const bool first_over = rng() & 1;
      at[pos[2 * k]] = {k + 1, first_over};
      at[pos[2 * k + 1]] = {k + 1, !first_over};
    }
    std::ostringstream os;
    std::vector<char> sgn(n + 1);
    for (int k = 1; k <= n; ++k) sgn[k] = (rng() & 1) ? '+' : '-';
    for (int i = 0; i < 2 * n; ++i)
      os << (i ? " " : "") << (at[i].second ? 'o' : 'u') << at[i].first << sgn[at[i].first];
    try {
      return ccc::parse_gauss(os.str());
    } catch (const ccc::Error&) {
      // non-planar draw; try again
    }
  }
}

}  // namespace fixtures
