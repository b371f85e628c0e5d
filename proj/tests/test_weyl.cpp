#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace loopnet;

namespace {
// Shared heavy fixture: lattice, profile, invariant cochain, field connection.
struct WeylCtx {
  fixtures::MinkLattice f = fixtures::mink_lattice();
  SimplexTable t{f.poset};
  QuadratureConfig cfg;
  HyperboloidProfile prof{1.0, cfg, 1.0};
  Cochain f0 = build_invariant_0cochain(f.poset, f.reflect);
  Cochain df = twisted_delta(f.poset, f0);
  FieldConnection conn{t, df, prof};

  Word loopS(int site) const {  // S -> U inside M, back inside Z
    Word w;
    w.letters = {generator_of(t, {f.Z[site], f.S[site], f.U[site]}),
                 generator_of(t, {f.M[site], f.U[site], f.S[site]})};
    return w;
  }
  Word loopV(int site) const {  // S -> V inside M, back inside Z
    Word w;
    w.letters = {generator_of(t, {f.Z[site], f.S[site], f.V[site]}),
                 generator_of(t, {f.M[site], f.V[site], f.S[site]})};
    return w;
  }
};
WeylCtx& ctx() {
  static WeylCtx c;
  return c;
}
}  // namespace

TEST_SUITE("weyl") {
  TEST_CASE("em transform basics") {
    auto& c = ctx();
    // translates pick up the plane-wave factor exactly
    TestFunction base = mink_atom(1.0, Vec4Q{0, 0, 0, 0}, Rat(1));
    Vec4Q y{1, 2, 0, 0};
    TestFunction moved = transport(base, GeomTranslation{y});
    for (double q : {0.3, 1.7, 6.0}) {
      std::array<double, 3> dir{0, 0, 1};
      double om = c.prof.omega(q);
      double py = om * to_double(y.t) - q * to_double(y.z);
      auto lhs = c.prof.em_point(moved, q, dir);
      auto rhs = std::complex<double>{std::cos(py), std::sin(py)} *
                 c.prof.em_point(base, q, dir);
      CHECK(std::abs(lhs - rhs) <= 1e-15 * (1.0 + std::abs(rhs)));
    }
    // zero function transforms to zero
    EmGrid g = em_transform(c.prof, TestFunction{}, 16);
    for (auto v : g.value) CHECK(v == std::complex<double>{0.0, 0.0});
    EmGrid g2 = em_transform(c.prof, base, 33);
    CHECK(g2.q.size() == 33);
    CHECK(g2.q.front() == 0.0);
    CHECK(g2.q.back() == c.prof.cutoff());
    CHECK(std::abs(g2.value.front()) > 0.0);
  }

  TEST_CASE("em transform matches the 4-D tensor oracle") {
    auto& c = ctx();
    TestFunction f = mink_atom(2.0, Vec4Q{0, 0, 0, 0}, Rat(2)) +
                     mink_atom(-1.0, Vec4Q{1, 1, 0, 0}, Rat(1));
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 5; ++i) {
      std::array<double, 3> p{u(rng), u(rng), u(rng)};
      double q = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
      std::array<double, 3> dir{p[0] / q, p[1] / q, p[2] / q};
      auto fast = c.prof.em_point(f, q, dir);
      auto oracle = oracles::em_4d_oracle(f, 1.0, p, 56);
      CHECK(std::abs(fast - oracle) <= 1e-6 * std::abs(oracle));
    }
  }

  TEST_CASE("hyperboloid inner product") {
    auto& c = ctx();
    TestFunction a = mink_atom(1.0, Vec4Q{0, 0, 0, 0}, Rat(1));
    TestFunction b = mink_atom(1.0, Vec4Q{Rat(1, 2), 1, 0, 0}, Rat(2));
    // positive on the diagonal
    CHECK(c.prof.inner(a, a).real() > 0.0);
    CHECK(c.prof.inner(a, a).imag() == 0.0);
    // conjugate symmetry
    auto ab = c.prof.inner(a, b);
    auto ba = c.prof.inner(b, a);
    CHECK(std::abs(ab - std::conj(ba)) <= 1e-14 * std::abs(ab));
    // reduced 1-D route matches the 3-D tensor oracle
    TestFunction f = mink_atom(2.0, Vec4Q{0, 0, 0, 0}, Rat(2)) +
                     mink_atom(-1.0, Vec4Q{1, 1, 0, 0}, Rat(1));
    auto fast = c.prof.inner(f, b);
    auto oracle = oracles::inner_3d_oracle(c.prof, f, b, 160, 16);
    CHECK(std::abs(fast - oracle) <= 1e-4 * std::abs(oracle));
  }

  TEST_CASE("symplectic form") {
    auto& c = ctx();
    TestFunction a = mink_atom(40.0, Vec4Q{0, 0, 0, 0}, Rat(1));
    TestFunction b = mink_atom(40.0, Vec4Q{3, 0, 0, 0}, Rat(1));     // timelike
    TestFunction s = mink_atom(40.0, Vec4Q{0, 6, 0, 0}, Rat(1));     // spacelike
    TestFunction s2 = mink_atom(40.0, Vec4Q{Rat(1), 6, 0, 0}, Rat(1));
    CHECK(c.prof.sigma(a, a) == 0.0);
    CHECK(c.prof.sigma(a, b) == -c.prof.sigma(b, a));
    CHECK(std::abs(c.prof.sigma(a, s)) < 1e-6);   // equal times: locality exact
    CHECK(std::abs(c.prof.sigma(a, s2)) < 1e-6);  // offset times: cancellation
    CHECK(std::abs(c.prof.sigma(a, b)) > 1e-3);   // overlapping light cones
  }

  TEST_CASE("weyl algebra") {
    auto& c = ctx();
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> amp(-3.0, 3.0);
    auto randomElement = [&]() {
      WeylElement e;
      e.phase = amp(rng);
      e.func = mink_atom(amp(rng), Vec4Q{0, 0, 0, 0}, Rat(1)) +
               mink_atom(amp(rng), Vec4Q{1, 2, 0, 0}, Rat(1)) +
               mink_atom(amp(rng), Vec4Q{-1, -2, 0, 0}, Rat(2));
      return e;
    };
    for (int i = 0; i < 10; ++i) {
      WeylElement A = randomElement(), B = randomElement(), C = randomElement();
      // A A^-1 = identity exactly
      CHECK(weyl_equal(weyl_multiply(c.prof, A, weyl_inverse(A)),
                       WeylElement::identity(), 1e-15));
      // commutator is the central phase -sigma
      WeylElement comm = weyl_multiply(
          c.prof, weyl_multiply(c.prof, A, B),
          weyl_multiply(c.prof, weyl_inverse(A), weyl_inverse(B)));
      CHECK(comm.func.zero());
      CHECK(std::abs(wrap_phase(comm.phase + c.prof.sigma(A.func, B.func))) < 1e-12);
      // associativity up to phase tolerance; amplitudes reassociate, so the
      // function parts agree to rounding
      WeylElement lhs = weyl_multiply(c.prof, weyl_multiply(c.prof, A, B), C);
      WeylElement rhs = weyl_multiply(c.prof, A, weyl_multiply(c.prof, B, C));
      CHECK(std::abs(wrap_phase(lhs.phase - rhs.phase)) < 1e-9);
      for (const Atom& atom : (lhs.func - rhs.func).atoms())
        CHECK(std::abs(atom.amplitude) < 1e-12);
    }
  }

  TEST_CASE("corona integrals") {
    auto& c = ctx();
    // nerve simplex: the corona is empty, the integral is exactly zero
    Simplex1 nerve{c.f.M[0], c.f.M[0], c.f.S[0]};
    auto resNerve =
        corona_integral(c.f.poset, nerve, canonical_region_atom(c.f.poset, c.f.M[0]), c.cfg);
    CHECK(resNerve.value == 0.0);
    // zero integrand
    Simplex1 b{c.f.M[0], c.f.U[0], c.f.S[0]};
    auto resZero = corona_integral(c.f.poset, b, TestFunction{}, c.cfg);
    CHECK(resZero.value == 0.0);
    // reproducible under the fixed seed, stable under sample doubling
    TestFunction fev = canonical_region_atom(c.f.poset, c.f.M[0]);
    auto r1 = corona_integral(c.f.poset, b, fev, c.cfg);
    auto r2 = corona_integral(c.f.poset, b, fev, c.cfg);
    CHECK(r1.value == r2.value);
    CHECK(r1.value > 0.0);
    QuadratureConfig doubled = c.cfg;
    doubled.mcSamples *= 2;
    auto r3 = corona_integral(c.f.poset, b, fev, doubled);
    CHECK(std::abs(r3.value - r1.value) < 0.01 * r1.value);
    CHECK_FALSE(r1.ciWarning);
    CHECK(r1.ciHalfWidth < 0.02 * r1.value);
  }

  TEST_CASE("field connection axioms") {
    auto& c = ctx();
    // identity on the nerve
    Simplex1 nerve{c.f.M[0], c.f.M[0], c.f.S[0]};
    CHECK(weyl_equal(c.conn.value(nerve), WeylElement::identity(), 0.0));
    // u(b~) u(b) = identity exactly, on every tangent simplex
    for (int i = 0; i < c.t.tangent_count(); ++i) {
      Simplex1 b = c.t.canon(i);
      WeylElement prod =
          weyl_multiply(c.prof, c.conn.value(opposite(b)), c.conn.value(b));
      CHECK(weyl_equal(prod, WeylElement::identity(), 1e-15));
    }
    CHECK_FALSE(c.conn.coronaWarnings());
  }

  TEST_CASE("field connection translation covariance is exact") {
    auto& c = ctx();
    int matched = 0;
    for (int i = 0; i < c.t.tangent_count(); ++i) {
      Simplex1 b = c.t.canon(i);
      auto ms = translate_element(c.f.poset, b.support, c.f.latticeStep);
      auto m0 = translate_element(c.f.poset, b.d0, c.f.latticeStep);
      auto m1 = translate_element(c.f.poset, b.d1, c.f.latticeStep);
      if (!ms || !m0 || !m1) continue;
      ++matched;
      Simplex1 tb{*ms, *m0, *m1};
      WeylElement v = c.conn.value(b);
      WeylElement w = c.conn.value(tb);
      CHECK(v.phase == w.phase);
      CHECK(transport(v.func, GeomTranslation{c.f.latticeStep}) == w.func);
      CHECK(c.conn.corona(b) == c.conn.corona(tb));  // bitwise
    }
    CHECK(matched > 50);
  }

  TEST_CASE("field connection reflection covariance is exact") {
    auto& c = ctx();
    int g = 1;  // the nontrivial reflection
    for (int i = 0; i < c.t.tangent_count(); i += 7) {
      Simplex1 b = c.t.canon(i);
      Simplex1 rb{c.f.reflect.act(g, b.support), c.f.reflect.act(g, b.d0),
                  c.f.reflect.act(g, b.d1)};
      WeylElement v = c.conn.value(b);
      WeylElement w = c.conn.value(rb);
      CHECK(v.phase == w.phase);
      CHECK(transport(v.func, GeomReflectionX{}) == w.func);
    }
  }

  TEST_CASE("holonomy") {
    auto& c = ctx();
    CHECK(weyl_equal(c.conn.holonomy(Word{}), WeylElement::identity(), 0.0));
    Word p = c.loopS(0);
    WeylElement hp = c.conn.holonomy(p);
    CHECK_FALSE(hp.func.zero());  // the loop sees two distinct coronas
    CHECK(weyl_equal(c.conn.holonomy(multiply(p, inverse(c.t, p))),
                     WeylElement::identity(), 1e-15));
    // holonomy of the inverse is the inverse holonomy
    WeylElement hinv = c.conn.holonomy(inverse(c.t, p));
    CHECK(weyl_equal(weyl_multiply(c.prof, hp, hinv), WeylElement::identity(), 1e-12));
    // commutator of causally disjoint loops: central, phase below locality
    Word q = c.loopS(4);
    REQUIRE(word_perp(c.t, p, q).has_value());
    Word comm = multiply(multiply(p, q), multiply(inverse(c.t, p), inverse(c.t, q)));
    WeylElement hc = c.conn.holonomy(comm);
    CHECK(hc.func.zero());
    CHECK(std::abs(hc.phase) < 1e-6);
    // per-simplex assignment route agrees
    std::map<Simplex1, WeylElement> assign;
    for (const Generator& g2 : p.letters) {
      Simplex1 b = letter_simplex(c.t, g2);
      assign[b] = c.conn.value(b);
    }
    CHECK(weyl_equal(holonomy(c.prof, assign, c.t, p), hp, 1e-15));
  }

  TEST_CASE("same-fibre loops fail to commute") {
    auto& c = ctx();
    Word p = c.loopS(0), q = c.loopV(0);
    double sigma = c.prof.sigma(c.conn.holonomy(p).func, c.conn.holonomy(q).func);
    CHECK(std::abs(sigma) > 1e-3);
  }

  TEST_CASE("nontriviality certificate") {
    auto& c = ctx();
    SUBCASE("spacelike translate") {
      Simplex1 b{c.f.TOP, c.f.S[1], c.f.S[0]};
      auto rep = certify_nontrivial(c.prof, c.f.poset, c.f0, b);
      CHECK(rep.direct > 1e-8);
      CHECK(rep.relErr < 1e-4);
    }
    SUBCASE("timelike translate") {
      Simplex1 b{c.f.M[0], c.f.U[0], c.f.S[0]};
      auto rep = certify_nontrivial(c.prof, c.f.poset, c.f0, b);
      CHECK(rep.direct > 1e-8);
      CHECK(rep.relErr < 1e-4);
    }
    SUBCASE("y = 0 gives exactly zero") {
      Simplex1 b{c.f.M[0], c.f.S[0], c.f.S[0]};
      auto rep = certify_nontrivial(c.prof, c.f.poset, c.f0, b);
      CHECK(rep.direct == 0.0);
      CHECK(rep.factorized == 0.0);
    }
  }

  TEST_CASE("nonflatness witness") {
    auto& c = ctx();
    auto wit = certify_nonflat(c.conn, 100000, 1e-6);
    REQUIRE(wit.has_value());
    CHECK_FALSE(in_nerve2(c.f.poset, wit->simplex));
    CHECK(wit->mismatchNormSq > 1e-6);
    // reproducible bitwise under the fixed seed
    auto wit2 = certify_nonflat(c.conn, 100000, 1e-6);
    REQUIRE(wit2.has_value());
    CHECK(wit->simplex == wit2->simplex);
    CHECK(wit->mismatchNormSq == wit2->mismatchNormSq);
    // nerve 2-simplices satisfy the cocycle identity exactly
    auto e2 = enumerate_2simplices(c.f.poset, 2000);
    int nerveChecked = 0;
    for (const auto& [s2, nerve] : e2.simplices) {
      if (!nerve) continue;
      ++nerveChecked;
      WeylElement lhs =
          weyl_multiply(c.prof, c.conn.value(s2.f0), c.conn.value(s2.f2));
      CHECK(weyl_equal(lhs, c.conn.value(s2.f1), 0.0));
    }
    CHECK(nerveChecked > 0);
  }

  TEST_CASE("nonflat witness stability under sample doubling") {
    auto& c = ctx();
    auto wit = certify_nonflat(c.conn, 100000, 1e-6);
    REQUIRE(wit.has_value());
    QuadratureConfig doubled = c.cfg;
    doubled.mcSamples *= 2;
    HyperboloidProfile prof2(1.0, doubled, 1.0);
    FieldConnection conn2(c.t, c.df, prof2);
    WeylElement lhs = weyl_multiply(
        prof2, conn2.value(wit->simplex.f0), conn2.value(wit->simplex.f2));
    TestFunction diff = lhs.func - conn2.value(wit->simplex.f1).func;
    double normSq = prof2.inner(diff, diff).real();
    // the mismatch norm is quadratic in the corona constants, so its doubling
    // stability is twice the corona confidence width
    CHECK(std::abs(normSq - wit->mismatchNormSq) < 0.05 * wit->mismatchNormSq);
  }

  TEST_CASE("backend verification and separation") {
    auto& c = ctx();
    WeylBackend backend(c.conn);
    CHECK(backend.verify(2, 40));
    Word p = c.loopS(0), q = c.loopV(0);
    auto gap = backend.separate(multiply(p, q), multiply(q, p));
    REQUIRE(gap.has_value());
    CHECK(*gap > 1e-3);
    CHECK_FALSE(backend.separate(p, p).has_value());
  }

  TEST_CASE("quadrature convergence guards") {
    QuadratureConfig bad;
    bad.profileNodes = 4;
    CHECK_THROWS_AS(
        [&] {
          HyperboloidProfile prof(1.0, bad, 1.0);
          prof.fTime(8.0, 0.0);  // forces node construction and validation
        }(),
        Error);
    QuadratureConfig coarse;
    coarse.radialNodesPerPanel = 2;
    coarse.radialBasePanels = 1;
    HyperboloidProfile prof(1.0, coarse, 1.0);
    TestFunction a = mink_atom(1.0, Vec4Q{0, 0, 0, 0}, Rat(2));
    CHECK_THROWS_AS((void)prof.inner(a, a), Error);
  }

  TEST_CASE("massless profile") {
    QuadratureConfig cfg;
    HyperboloidProfile prof(0.0, cfg, 1.0);
    TestFunction a = mink_atom(1.0, Vec4Q{0, 0, 0, 0}, Rat(1));
    auto n = prof.inner(a, a);
    CHECK(n.real() > 0.0);
    CHECK(std::isfinite(n.real()));
    TestFunction far = mink_atom(1.0, Vec4Q{Rat(1), 6, 0, 0}, Rat(1));
    CHECK(std::abs(prof.sigma(a, far)) < 1e-6);
  }
}
