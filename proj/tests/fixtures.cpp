#include "fixtures.hpp"

#include <string>
#include <vector>

namespace loopnet::fixtures {

Diamond diamond() {
  Diamond d;
  std::vector<std::string> labels{"x", "y", "o", "ohat"};
  d.x = 0;
  d.y = 1;
  d.o = 2;
  d.ohat = 3;
  d.poset = CausalPoset::from_relations(labels, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, {});
  return d;
}

Diamond diamond_geo() {
  Diamond d;
  std::vector<DoubleConeSpec> cones{
      {"x", Vec4Q{0, -1, 0, 0}, Rat(1)},
      {"y", Vec4Q{0, 1, 0, 0}, Rat(1)},
      {"o", Vec4Q{0, 0, 0, 0}, Rat(4)},
      {"ohat", Vec4Q{1, 0, 0, 0}, Rat(7, 2)},
  };
  d.poset = build_minkowski_lattice(cones);
  d.x = 0;
  d.y = 1;
  d.o = 2;
  d.ohat = 3;
  return d;
}

TwoTowers two_towers() {
  TwoTowers f;
  std::vector<std::string> labels{"x1", "y1", "o1a", "o1b", "O1",
                                  "x2", "y2", "o2a", "o2b", "O2", "T"};
  f.x1 = 0; f.y1 = 1; f.o1a = 2; f.o1b = 3; f.O1 = 4;
  f.x2 = 5; f.y2 = 6; f.o2a = 7; f.o2b = 8; f.O2 = 9;
  f.T = 10;
  std::vector<std::pair<int, int>> leq;
  auto tower = [&leq](int x, int y, int oa, int ob, int O) {
    leq.insert(leq.end(), {{x, oa}, {x, ob}, {y, oa}, {y, ob}, {oa, O}, {ob, O}});
  };
  tower(f.x1, f.y1, f.o1a, f.o1b, f.O1);
  tower(f.x2, f.y2, f.o2a, f.o2b, f.O2);
  for (int e = 0; e < 10; ++e) leq.emplace_back(e, f.T);
  f.poset = CausalPoset::from_relations(labels, leq, {{f.O1, f.O2}});

  std::vector<int> perm{5, 6, 7, 8, 9, 0, 1, 2, 3, 4, 10};
  f.swap = SymmetryAction::generate(f.poset, {{"swap", perm, GeomMap{}}});
  return f;
}

MinkLattice mink_lattice() {
  MinkLattice f;
  std::vector<DoubleConeSpec> cones;
  auto site = [](int j) { return Rat(4 * j - 10); };
  for (int j = 0; j < 6; ++j) {
    cones.push_back({"S" + std::to_string(j), Vec4Q{0, site(j), 0, 0}, Rat(1)});
    cones.push_back({"U" + std::to_string(j), Vec4Q{1, site(j), 0, 0}, Rat(1)});
    cones.push_back({"V" + std::to_string(j), Vec4Q{-1, site(j), 0, 0}, Rat(1)});
    cones.push_back({"M" + std::to_string(j), Vec4Q{0, site(j), 0, 0}, Rat(2)});
    cones.push_back({"Z" + std::to_string(j), Vec4Q{0, site(j), 0, 0}, Rat(4)});
    f.S[j] = 5 * j;
    f.U[j] = 5 * j + 1;
    f.V[j] = 5 * j + 2;
    f.M[j] = 5 * j + 3;
    f.Z[j] = 5 * j + 4;
  }
  cones.push_back({"TOP", Vec4Q{0, 0, 0, 0}, Rat(16)});
  f.TOP = 30;
  f.poset = build_minkowski_lattice(cones);
  f.reflect = reflection_action(f.poset);
  f.latticeStep = Vec4Q{0, 4, 0, 0};
  return f;
}

SymmetryAction reflection_action(const CausalPoset& p) {
  std::vector<int> perm(p.size(), -1);
  for (int e = 0; e < p.size(); ++e) {
    const auto& cone = std::get<DoubleConeQ>(p.geometry(e));
    DoubleConeQ mirrored{{cone.center.t, -cone.center.x, cone.center.y, cone.center.z},
                         cone.radius};
    for (int i = 0; i < p.size(); ++i) {
      const auto& c = std::get<DoubleConeQ>(p.geometry(i));
      if (c.center == mirrored.center && c.radius == mirrored.radius) perm[e] = i;
    }
    if (perm[e] < 0) throw Error("BadFixture", "poset not reflection symmetric");
  }
  return SymmetryAction::generate(p, {{"reflect", perm, GeomReflectionX{}}});
}

MinkCov mink_cov() {
  MinkCov f;
  std::vector<DoubleConeSpec> cones{
      {"Am", Vec4Q{0, -2, 0, 0}, Rat(1)}, {"Ap", Vec4Q{0, 2, 0, 0}, Rat(1)},
      {"B", Vec4Q{0, 0, 0, 0}, Rat(1)},   {"C", Vec4Q{0, 0, 0, 0}, Rat(4)},
      {"D", Vec4Q{0, 0, 0, 0}, Rat(8)},
  };
  f.poset = build_minkowski_lattice(cones);
  f.Aminus = 0;
  f.Aplus = 1;
  f.B = 2;
  f.C = 3;
  f.D = 4;
  f.reflect = reflection_action(f.poset);
  return f;
}

Obstructed obstructed() {
  Obstructed f;
  std::vector<std::string> labels{"o", "a", "m1", "m2", "u1", "u2", "v1", "v2"};
  f.o = 0; f.a = 1; f.m1 = 2; f.m2 = 3; f.u1 = 4; f.u2 = 5; f.v1 = 6; f.v2 = 7;
  std::vector<std::pair<int, int>> leq{{f.o, f.u1}, {f.o, f.u2}, {f.m1, f.u1},
                                       {f.m1, f.v1}, {f.m2, f.u2}, {f.m2, f.v2},
                                       {f.a, f.v1},  {f.a, f.v2}};
  f.poset = CausalPoset::from_relations(labels, leq, {});
  std::vector<int> perm{0, 1, 3, 2, 5, 4, 7, 6};
  f.swap = SymmetryAction::generate(f.poset, {{"swap", perm, GeomMap{}}});
  return f;
}

Circle circle(int n, int minLen, int maxLen) {
  Circle f;
  f.n = n;
  f.poset = build_circle(n, minLen, maxLen);
  std::vector<int> perm(f.poset.size(), -1);
  for (int e = 0; e < f.poset.size(); ++e) {
    const auto& arc = std::get<ArcQ>(f.poset.geometry(e));
    ArcQ moved{arc.n, (arc.start + 1) % arc.n, arc.length};
    for (int i = 0; i < f.poset.size(); ++i) {
      const auto& b = std::get<ArcQ>(f.poset.geometry(i));
      if (b.start == moved.start && b.length == moved.length) perm[e] = i;
    }
  }
  f.rotations =
      SymmetryAction::generate(f.poset, {{"r", perm, GeomRotationTurns{Rat(1, n)}}});
  return f;
}

ObstructedAtom obstructed_atom() {
  ObstructedAtom f;
  std::vector<DoubleConeSpec> cones{{"O", Vec4Q{0, -1, 0, 0}, Rat(2)}};
  f.poset = build_minkowski_lattice(cones);
  // combinatorially trivial Z2 whose geometric realization moves every atom
  // supported in the off-center cone: its stabilizer fixes no bump
  std::vector<int> perm{0};
  f.action = SymmetryAction::generate(f.poset, {{"flip", perm, GeomReflectionX{}}});
  return f;
}

}  // namespace loopnet::fixtures
