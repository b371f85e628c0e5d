#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "loopnet/simplex.hpp"

namespace loopnet {

// Bump profile h(s) = exp(-1/(1-s^2)) for |s|<1, else 0; even and smooth.
double bump_h(double s);

// Minkowski atom: amplitude * h(2 (t-c_t)/R) * h(4 |x-c|^2 / R^2); the support
// is {|t-c_t| <= R/2} x {|x-c| <= R/2}, contained in the double cone (c, R).
struct MinkSupport {
  Vec4Q center;
  Rat scale;  // R
  friend bool operator==(const MinkSupport&, const MinkSupport&) = default;
  friend bool operator<(const MinkSupport& a, const MinkSupport& b) {
    if (!(a.center == b.center)) return a.center < b.center;
    return a.scale < b.scale;
  }
};
// Circle atom: amplitude * h(2 d(theta, c)/w) in turns; support has angular
// width w around c.
struct CircleSupport {
  Rat centerTurns;  // in [0,1)
  Rat widthTurns;
  friend bool operator==(const CircleSupport&, const CircleSupport&) = default;
  friend bool operator<(const CircleSupport& a, const CircleSupport& b) {
    if (a.centerTurns != b.centerTurns) return a.centerTurns < b.centerTurns;
    return a.widthTurns < b.widthTurns;
  }
};
using AtomSupport = std::variant<MinkSupport, CircleSupport>;
bool support_less(const AtomSupport& a, const AtomSupport& b);

struct Atom {
  double amplitude = 0.0;
  AtomSupport where;
  friend bool operator==(const Atom&, const Atom&) = default;
};

// Finite real span of translated/scaled bumps; kept canonical (sorted by
// support, merged amplitudes, zeros pruned) so algebraic identities hold
// exactly.
class TestFunction {
 public:
  TestFunction() = default;
  explicit TestFunction(std::vector<Atom> atoms) { assign(std::move(atoms)); }

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool zero() const { return atoms_.empty(); }

  friend TestFunction operator+(const TestFunction& a, const TestFunction& b);
  friend TestFunction operator-(const TestFunction& a, const TestFunction& b);
  friend TestFunction operator*(double s, const TestFunction& f);
  friend bool operator==(const TestFunction&, const TestFunction&) = default;

  double eval_mink(const std::array<double, 4>& x) const;

 private:
  void assign(std::vector<Atom> atoms);
  std::vector<Atom> atoms_;
};

TestFunction mink_atom(double amplitude, const Vec4Q& center, const Rat& scale);
TestFunction circle_atom(double amplitude, const Rat& centerTurns, const Rat& widthTurns);

// Geometric transport of test functions: f |-> f . s^{-1}.
TestFunction transport(const TestFunction& f, const GeomMap& s);

// Simplex keys per degree.
struct Simplex2Key {
  int support;
  Simplex1 f0, f1, f2;
  friend auto operator<=>(const Simplex2Key&, const Simplex2Key&) = default;
  friend bool operator==(const Simplex2Key&, const Simplex2Key&) = default;
};
inline Simplex2Key key_of(const Simplex2& c) { return {c.support, c.f0, c.f1, c.f2}; }

// Test-function valued cochain of degree 0, 1 or 2. Values default to zero.
class Cochain {
 public:
  explicit Cochain(int degree) : degree_(degree) {}
  int degree() const { return degree_; }

  const TestFunction& at(int element) const;
  const TestFunction& at(const Simplex1& b) const;
  const TestFunction& at(const Simplex2& c) const;
  void set(int element, TestFunction f);
  void set(const Simplex1& b, TestFunction f);
  void set(const Simplex2& c, TestFunction f);

  const std::map<int, TestFunction>& values0() const { return v0_; }
  const std::map<Simplex1, TestFunction>& values1() const { return v1_; }
  const std::map<Simplex2Key, TestFunction>& values2() const { return v2_; }

  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  int degree_;
  std::map<int, TestFunction> v0_;
  std::map<Simplex1, TestFunction> v1_;
  std::map<Simplex2Key, TestFunction> v2_;
};

// (df)_x = sum_k (-1)^k f_{d_k x}; degree 0 -> 1 and 1 -> 2, materialized on
// the enumerated simplices of the poset (2-simplices capped).
Cochain coboundary(const CausalPoset& p, const Cochain& f, std::size_t cap2 = 20000);

// Pointwise values without materializing a full cochain.
TestFunction coboundary_value(const Cochain& f0, const Simplex1& b);
TestFunction twisted_delta_value(const Cochain& f0, const Simplex1& b);

// (delta f)_b = f_{d0 b} - f_{d1 b} + f_{|b|} on every 1-simplex.
Cochain twisted_delta(const CausalPoset& p, const Cochain& f0);

Cochain bar(const Cochain& f);
std::pair<Cochain, Cochain> split_even_odd(const Cochain& f);

// (s f)_x := f_{s(x)} . s  (pullback along the geometric realization).
Cochain group_action(const CausalPoset& p, const SymmetryAction& act, int g,
                     const Cochain& f);
bool is_invariant(const CausalPoset& p, const SymmetryAction& act, const Cochain& f);

// Orbit-transported nonzero nonnegative invariant cochains; throws
// ObstructedOrbit when a stabilizer fixes no candidate atom.
Cochain build_invariant_0cochain(const CausalPoset& p, const SymmetryAction& act);
Cochain build_invariant_1cochain(const CausalPoset& p, const SymmetryAction& act);

// Zero on the nerve, untouched on tangent simplices.
Cochain cutoff_tilde(const CausalPoset& p, const Cochain& f);

// Support condition f_x in D_{|x|}: every atom support inside cl(region(|x|)).
bool support_condition_ok(const CausalPoset& p, const Cochain& f);
bool atom_inside_region(const Atom& a, const RegionGeometry& region);

// The canonical per-element atom of a geometric poset (center bump of the
// region); the basis for invariant 0-cochains and the field connection.
TestFunction canonical_region_atom(const CausalPoset& p, int element);

}  // namespace loopnet
