#include <doctest.h>

#include "loopnet/net.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace loopnet;

TEST_SUITE("net") {
  TEST_CASE("fibre generators") {
    auto f = fixtures::two_towers();
    SimplexTable t(f.poset);
    auto fib = fibre_generators(t, f.O1, 2);
    // contains the x1 and y1 loops (up to inverse pairing)
    Word px = parse_word(t, "(o1b;x1,y1) (o1a;y1,x1)");
    Word py = parse_word(t, "(o1b;y1,x1) (o1a;x1,y1)");
    auto holds = [&](const Word& w) {
      Word a = std::min(w, inverse(t, w));
      for (const Word& g : fib.generators)
        if (g == a) return true;
      return false;
    };
    CHECK(holds(px));
    CHECK(holds(py));
    for (const Word& g : fib.generators) {
      auto lb = is_loop(t, g);
      REQUIRE(lb.has_value());
      for (int s : word_support(t, g)) CHECK(f.poset.leq(s, f.O1));
    }
    // minimal element: trivial fibre
    CHECK(fibre_generators(t, f.x1, 4).generators.empty());
    // cap growth
    auto small = fibre_generators(t, f.O1, 2).generators.size();
    auto large = fibre_generators(t, f.O1, 4).generators.size();
    CHECK(large > small);
  }

  TEST_CASE("isotony") {
    auto f = fixtures::two_towers();
    SimplexTable t(f.poset);
    CHECK(check_isotony(t, f.o1a, f.O1, 3));
    for (int o = 0; o < f.poset.size(); ++o)
      for (int a = 0; a < f.poset.size(); ++a)
        if (o != a && f.poset.leq(o, a)) CHECK(check_isotony(t, o, a, 3));
    CHECK_THROWS_AS(check_isotony(t, f.O1, f.O2, 3), Error);
  }

  TEST_CASE("causality certificates for disjoint fibres") {
    auto f = fixtures::two_towers();
    SimplexTable t(f.poset);
    auto entry = check_causality(t, f.O1, f.O2, 3);
    CHECK(entry.pairs > 0);
    CHECK(entry.certified == entry.pairs);
    CHECK_THROWS_AS(check_causality(t, f.o1a, f.o1b, 3), Error);
  }

  TEST_CASE("covariance of fibres under the tower swap") {
    auto f = fixtures::two_towers();
    SimplexTable t(f.poset);
    auto rep = symmetry_on_net(t, f.swap, 3);
    CHECK(rep.allOk());
    CHECK(rep.compositionLaw);
  }

  TEST_CASE("identity group acts trivially on every fibre") {
    auto f = fixtures::two_towers();
    SimplexTable t(f.poset);
    auto id = SymmetryAction::trivial(f.poset);
    auto rep = symmetry_on_net(t, id, 2);
    CHECK(rep.allOk());
  }

  TEST_CASE("full net report on the towers") {
    auto f = fixtures::two_towers();
    SimplexTable t(f.poset);
    auto rep = build_net_report(t, &f.swap, 2);
    CHECK(rep.isotonyOk);
    CHECK_FALSE(rep.causality.empty());
    for (auto& e : rep.causality) CHECK(e.certified == e.pairs);
    CHECK(rep.covariance.allOk());
  }

  TEST_CASE("reflection covariance on the lattice") {
    auto f = fixtures::mink_lattice();
    SimplexTable t(f.poset);
    auto rep = symmetry_on_net(t, f.reflect, 2);
    CHECK(rep.allOk());
  }
}
