#include "loopnet/cochain.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace loopnet {

double bump_h(double s) {
  double s2 = s * s;
  if (s2 >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - s2));
}

bool support_less(const AtomSupport& a, const AtomSupport& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (a.index() == 0) return std::get<0>(a) < std::get<0>(b);
  return std::get<1>(a) < std::get<1>(b);
}

void TestFunction::assign(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& x, const Atom& y) { return support_less(x.where, y.where); });
  atoms_.clear();
  for (Atom& a : atoms) {
    if (!atoms_.empty() && atoms_.back().where == a.where)
      atoms_.back().amplitude += a.amplitude;
    else
      atoms_.push_back(a);
  }
  std::erase_if(atoms_, [](const Atom& a) { return a.amplitude == 0.0; });
}

TestFunction operator+(const TestFunction& a, const TestFunction& b) {
  std::vector<Atom> all = a.atoms_;
  all.insert(all.end(), b.atoms_.begin(), b.atoms_.end());
  return TestFunction(std::move(all));
}

TestFunction operator-(const TestFunction& a, const TestFunction& b) {
  std::vector<Atom> all = a.atoms_;
  for (Atom x : b.atoms_) {
    x.amplitude = -x.amplitude;
    all.push_back(x);
  }
  return TestFunction(std::move(all));
}

TestFunction operator*(double s, const TestFunction& f) {
  std::vector<Atom> all = f.atoms_;
  for (Atom& a : all) a.amplitude *= s;
  return TestFunction(std::move(all));
}

double TestFunction::eval_mink(const std::array<double, 4>& x) const {
  double total = 0.0;
  for (const Atom& a : atoms_) {
    const auto* m = std::get_if<MinkSupport>(&a.where);
    if (!m) throw Error("BadAtom", "eval_mink on a non-Minkowski atom");
    auto c = m->center.to_double();
    double R = to_double(m->scale);
    double dt = x[0] - c[0];
    double dx = x[1] - c[1], dy = x[2] - c[2], dz = x[3] - c[3];
    double r2 = dx * dx + dy * dy + dz * dz;
    total += a.amplitude * bump_h(2.0 * dt / R) * bump_h(4.0 * r2 / (R * R));
  }
  return total;
}

TestFunction mink_atom(double amplitude, const Vec4Q& center, const Rat& scale) {
  return TestFunction({Atom{amplitude, MinkSupport{center, scale}}});
}

TestFunction circle_atom(double amplitude, const Rat& centerTurns, const Rat& widthTurns) {
  return TestFunction({Atom{amplitude, CircleSupport{centerTurns, widthTurns}}});
}

namespace {
Rat mod1(Rat r) {
  long long whole = r.numerator() / r.denominator();
  r -= Rat(whole);
  if (r < 0) r += Rat(1);
  return r;
}
}  // namespace

TestFunction transport(const TestFunction& f, const GeomMap& s) {
  if (std::holds_alternative<std::monostate>(s)) return f;
  std::vector<Atom> out = f.atoms();
  for (Atom& a : out) {
    if (auto* tr = std::get_if<GeomTranslation>(&s)) {
      auto* m = std::get_if<MinkSupport>(&a.where);
      if (!m) throw Error("BadGeom", "translation applied to a circle atom");
      m->center = m->center + tr->offset;
    } else if (auto* rot = std::get_if<GeomRotationTurns>(&s)) {
      auto* c = std::get_if<CircleSupport>(&a.where);
      if (!c) throw Error("BadGeom", "rotation applied to a Minkowski atom");
      c->centerTurns = mod1(c->centerTurns + rot->turns);
    } else if (std::holds_alternative<GeomReflectionX>(s)) {
      auto* m = std::get_if<MinkSupport>(&a.where);
      if (!m) throw Error("BadGeom", "reflection applied to a circle atom");
      m->center.x = -m->center.x;  // the bump is even in every direction
    }
  }
  return TestFunction(std::move(out));
}

namespace {
GeomMap geom_inverse(const GeomMap& s) {
  if (auto* tr = std::get_if<GeomTranslation>(&s)) return GeomTranslation{-tr->offset};
  if (auto* rot = std::get_if<GeomRotationTurns>(&s))
    return GeomRotationTurns{mod1(-rot->turns)};
  return s;
}
const TestFunction kZero{};
}  // namespace

const TestFunction& Cochain::at(int element) const {
  auto it = v0_.find(element);
  return it == v0_.end() ? kZero : it->second;
}
const TestFunction& Cochain::at(const Simplex1& b) const {
  auto it = v1_.find(b);
  return it == v1_.end() ? kZero : it->second;
}
const TestFunction& Cochain::at(const Simplex2& c) const {
  auto it = v2_.find(key_of(c));
  return it == v2_.end() ? kZero : it->second;
}
void Cochain::set(int element, TestFunction f) {
  if (degree_ != 0) throw Error("BadDegree", "degree-0 value on a non-0 cochain");
  if (f.zero())
    v0_.erase(element);
  else
    v0_[element] = std::move(f);
}
void Cochain::set(const Simplex1& b, TestFunction f) {
  if (degree_ != 1) throw Error("BadDegree", "degree-1 value on a non-1 cochain");
  if (f.zero())
    v1_.erase(b);
  else
    v1_[b] = std::move(f);
}
void Cochain::set(const Simplex2& c, TestFunction f) {
  if (degree_ != 2) throw Error("BadDegree", "degree-2 value on a non-2 cochain");
  if (f.zero())
    v2_.erase(key_of(c));
  else
    v2_[key_of(c)] = std::move(f);
}

TestFunction coboundary_value(const Cochain& f0, const Simplex1& b) {
  return f0.at(b.d0) - f0.at(b.d1);
}

TestFunction twisted_delta_value(const Cochain& f0, const Simplex1& b) {
  return f0.at(b.d0) - f0.at(b.d1) + f0.at(b.support);
}

Cochain coboundary(const CausalPoset& p, const Cochain& f, std::size_t cap2) {
  if (f.degree() == 0) {
    Cochain out(1);
    for (const auto& [b, cls] : enumerate_1simplices(p)) {
      (void)cls;
      out.set(b, coboundary_value(f, b));
    }
    return out;
  }
  if (f.degree() == 1) {
    Cochain out(2);
    auto e2 = enumerate_2simplices(p, cap2);
    for (const auto& [c, nerve] : e2.simplices) {
      (void)nerve;
      out.set(c, f.at(c.f0) - f.at(c.f1) + f.at(c.f2));
    }
    return out;
  }
  throw Error("BadDegree", "coboundary beyond degree 1");
}

Cochain twisted_delta(const CausalPoset& p, const Cochain& f0) {
  if (f0.degree() != 0) throw Error("BadDegree", "twisted delta needs degree 0");
  Cochain out(1);
  for (const auto& [b, cls] : enumerate_1simplices(p)) {
    (void)cls;
    out.set(b, twisted_delta_value(f0, b));
  }
  return out;
}

Cochain bar(const Cochain& f) {
  if (f.degree() != 1) throw Error("BadDegree", "bar involution needs degree 1");
  Cochain out(1);
  for (const auto& [b, v] : f.values1()) out.set(opposite(b), v);
  return out;
}

std::pair<Cochain, Cochain> split_even_odd(const Cochain& f) {
  Cochain fb = bar(f);
  Cochain even(1), odd(1);
  std::set<Simplex1> keys;
  for (const auto& [b, v] : f.values1()) keys.insert(b);
  for (const auto& [b, v] : fb.values1()) keys.insert(b);
  for (const Simplex1& b : keys) {
    even.set(b, 0.5 * (f.at(b) + fb.at(b)));
    odd.set(b, 0.5 * (f.at(b) - fb.at(b)));
  }
  return {even, odd};
}

Cochain group_action(const CausalPoset& p, const SymmetryAction& act, int g,
                     const Cochain& f) {
  GeomMap backward = geom_inverse(act.geom(g));
  Cochain out(f.degree());
  if (f.degree() == 0) {
    for (int e = 0; e < p.size(); ++e) out.set(e, transport(f.at(act.act(g, e)), backward));
    return out;
  }
  if (f.degree() == 1) {
    for (const auto& [b, cls] : enumerate_1simplices(p)) {
      (void)cls;
      Simplex1 gb{act.act(g, b.support), act.act(g, b.d0), act.act(g, b.d1)};
      out.set(b, transport(f.at(gb), backward));
    }
    return out;
  }
  throw Error("BadDegree", "group action implemented for degrees 0 and 1");
}

bool is_invariant(const CausalPoset& p, const SymmetryAction& act, const Cochain& f) {
  // f_{s(x)} == f_x . s^{-1} for all x and s
  for (int g = 0; g < act.order(); ++g) {
    const GeomMap& fw = act.geom(g);
    if (f.degree() == 0) {
      for (int e = 0; e < p.size(); ++e)
        if (!(f.at(act.act(g, e)) == transport(f.at(e), fw))) return false;
    } else if (f.degree() == 1) {
      for (const auto& [b, cls] : enumerate_1simplices(p)) {
        (void)cls;
        Simplex1 gb{act.act(g, b.support), act.act(g, b.d0), act.act(g, b.d1)};
        if (!(f.at(gb) == transport(f.at(b), fw))) return false;
      }
    } else {
      throw Error("BadDegree", "invariance implemented for degrees 0 and 1");
    }
  }
  return true;
}

// Amplitude sized so loop holonomies of the lattice fixtures produce
// commutator phases well clear of the locality tolerance.
constexpr double kCanonicalAmplitude = 3.0;

TestFunction canonical_region_atom(const CausalPoset& p, int element) {
  if (!p.has_geometry()) throw Error("NoGeometry", "poset has no geometric payload");
  const RegionGeometry& region = p.geometry(element);
  if (const auto* cone = std::get_if<DoubleConeQ>(&region))
    return mink_atom(kCanonicalAmplitude, cone->center, cone->radius);
  if (const auto* arc = std::get_if<ArcQ>(&region)) {
    Rat mid = mod1(Rat(2 * arc->start + arc->length, 2 * arc->n));
    return circle_atom(kCanonicalAmplitude, mid, Rat(arc->length, arc->n));
  }
  throw Error("NoGeometry", "element has no atom-compatible geometry");
}

Cochain build_invariant_0cochain(const CausalPoset& p, const SymmetryAction& act) {
  Cochain out(0);
  std::vector<char> done(p.size(), 0);
  for (int rep = 0; rep < p.size(); ++rep) {
    if (done[rep]) continue;
    TestFunction f0 = canonical_region_atom(p, rep);
    auto os = orbit_and_stabilizer(act, rep);
    for (int s : os.stabilizer)
      if (!(transport(f0, act.geom(s)) == f0))
        throw Error("ObstructedOrbit",
                    "stabilizer of " + p.label(rep) + " fixes no candidate atom");
    for (int g = 0; g < act.order(); ++g) {
      int x = act.act(g, rep);
      TestFunction fx = transport(f0, act.geom(g));
      if (done[x]) {
        if (!(out.at(x) == fx))
          throw Error("ObstructedOrbit", "inconsistent transport at " + p.label(x));
      } else {
        out.set(x, fx);
        done[x] = 1;
      }
    }
  }
  return out;
}

Cochain build_invariant_1cochain(const CausalPoset& p, const SymmetryAction& act) {
  Cochain out(1);
  auto all = enumerate_1simplices(p);
  std::set<Simplex1> done;
  for (const auto& [rep, cls] : all) {
    if (cls == SimplexClass::Degenerate) continue;  // zero by construction
    if (done.contains(rep)) continue;
    TestFunction f0 = canonical_region_atom(p, rep.support);
    // stabilizer of the 1-simplex must fix the atom (free orbits trivially do)
    for (int g = 0; g < act.order(); ++g) {
      Simplex1 gb{act.act(g, rep.support), act.act(g, rep.d0), act.act(g, rep.d1)};
      if (gb == rep && !(transport(f0, act.geom(g)) == f0))
        throw Error("ObstructedOrbit", "non-free orbit without a fixed atom");
    }
    for (int g = 0; g < act.order(); ++g) {
      Simplex1 gb{act.act(g, rep.support), act.act(g, rep.d0), act.act(g, rep.d1)};
      TestFunction fx = transport(f0, act.geom(g));
      if (done.contains(gb)) {
        if (!(out.at(gb) == fx))
          throw Error("ObstructedOrbit", "inconsistent transport on a 1-simplex orbit");
      } else {
        out.set(gb, fx);
        done.insert(gb);
      }
    }
  }
  return out;
}

Cochain cutoff_tilde(const CausalPoset& p, const Cochain& f) {
  if (f.degree() != 1) throw Error("BadDegree", "cutoff needs degree 1");
  Cochain out(1);
  for (const auto& [b, v] : f.values1())
    if (in_tangent1(p, b)) out.set(b, v);
  return out;
}

bool atom_inside_region(const Atom& a, const RegionGeometry& region) {
  if (const auto* cone = std::get_if<DoubleConeQ>(&region)) {
    const auto* m = std::get_if<MinkSupport>(&a.where);
    if (!m) return false;
    Rat q = cone->radius - m->scale - rat_abs(m->center.t - cone->center.t);
    if (q < 0) return false;
    return (m->center - cone->center).space_norm_sq() <= q * q;
  }
  if (const auto* arc = std::get_if<ArcQ>(&region)) {
    const auto* c = std::get_if<CircleSupport>(&a.where);
    if (!c) return false;
    Rat lo = mod1(c->centerTurns - c->widthTurns / 2 - Rat(arc->start, arc->n));
    return lo + c->widthTurns <= Rat(arc->length, arc->n);
  }
  return false;
}

bool support_condition_ok(const CausalPoset& p, const Cochain& f) {
  if (!p.has_geometry()) return false;
  auto okAt = [&](const TestFunction& v, int support) {
    for (const Atom& a : v.atoms())
      if (!atom_inside_region(a, p.geometry(support))) return false;
    return true;
  };
  if (f.degree() == 0) {
    for (const auto& [e, v] : f.values0())
      if (!okAt(v, e)) return false;
    return true;
  }
  if (f.degree() == 1) {
    for (const auto& [b, v] : f.values1())
      if (!okAt(v, b.support)) return false;
    return true;
  }
  for (const auto& [c, v] : f.values2())
    if (!okAt(v, c.support)) return false;
  return true;
}

}  // namespace loopnet
