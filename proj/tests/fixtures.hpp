#pragma once

#include <memory>

#include "loopnet/causet.hpp"
#include "loopnet/cochain.hpp"

namespace loopnet::fixtures {

// Abstract diamond: x, y below two incomparable tops o, ohat; empty perp.
struct Diamond {
  CausalPoset poset;
  int x, y, o, ohat;
};
Diamond diamond();

// Geometric diamond with the same order shape plus x perp y.
Diamond diamond_geo();

// Two five-element towers under causally disjoint tops O1 perp O2, plus a
// common top T. Z2 swaps the towers.
struct TwoTowers {
  CausalPoset poset;
  SymmetryAction swap;
  int x1, y1, o1a, o1b, O1;
  int x2, y2, o2a, o2b, O2;
  int T;
};
TwoTowers two_towers();

// 31 double cones: rows S (t=0), U (t=1), V (t=-1) of radius 1, M (radius 2),
// Z (radius 4) over six sites x = 4j-10, plus a common TOP of radius 16.
// Symmetric under the spatial reflection x -> -x; translation by (0,4,0,0)
// acts partially.
struct MinkLattice {
  CausalPoset poset;
  SymmetryAction reflect;
  int S[6], U[6], V[6], M[6], Z[6], TOP;
  Vec4Q latticeStep;  // (0,4,0,0)
};
MinkLattice mink_lattice();

// Upward-directed five-cone family, Z2 spatial reflection.
struct MinkCov {
  CausalPoset poset;
  SymmetryAction reflect;
  int Aminus, Aplus, B, C, D;
};
MinkCov mink_cov();

// Crafted obstruction: the only o -> a routes pass through a swapped pair.
struct Obstructed {
  CausalPoset poset;
  SymmetryAction swap;
  int o, a, m1, m2, u1, u2, v1, v2;
};
Obstructed obstructed();

// Circle poset with the full rotation group Z_n attached.
struct Circle {
  CausalPoset poset;
  SymmetryAction rotations;
  int n;
};
Circle circle(int n, int minLen, int maxLen);

// One cone with a combinatorially trivial Z2 whose geometric realization is a
// nonzero translation: no atom is stabilizer-fixed.
struct ObstructedAtom {
  CausalPoset poset;
  SymmetryAction action;
};
ObstructedAtom obstructed_atom();

SymmetryAction reflection_action(const CausalPoset& p);

}  // namespace loopnet::fixtures
