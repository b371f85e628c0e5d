#include "loopnet/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace loopnet {

namespace {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double z1 = 0.0, pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * z * p1 - j * p2) / (j + 1);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      z1 = z;
      z = z1 - p0 / pp;
      if (std::abs(z - z1) <= 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

struct ScaledNodes {
  std::vector<double> x, w;  // mapped onto [a, b]
};
ScaledNodes map_nodes(const std::vector<double>& x, const std::vector<double>& w,
                      double a, double b) {
  ScaledNodes out;
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  out.x.reserve(x.size());
  out.w.reserve(w.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.x.push_back(mid + half * x[i]);
    out.w.push_back(half * w[i]);
  }
  return out;
}

const MinkSupport& mink_of(const Atom& a) {
  const auto* m = std::get_if<MinkSupport>(&a.where);
  if (!m) throw Error("BadAtom", "hyperboloid transform needs Minkowski atoms");
  return *m;
}

constexpr double kTwoPiPow4Inv = 1.0 / (16.0 * M_PI * M_PI * M_PI * M_PI);  // (2pi)^-4

}  // namespace

bool HyperboloidProfile::PairKey::operator<(const PairKey& o) const {
  if (Ra != o.Ra) return Ra < o.Ra;
  if (Rb != o.Rb) return Rb < o.Rb;
  if (dt != o.dt) return dt < o.dt;
  return dxSq < o.dxSq;
}

HyperboloidProfile::HyperboloidProfile(double mass, QuadratureConfig cfg, double minScale)
    : mass_(mass), cfg_(cfg) {
  if (mass < 0) throw Error("BadMass", "mass must be nonnegative");
  cutoff_ = cfg_.cutoff > 0 ? cfg_.cutoff : 40.0 / minScale;
}

const HyperboloidProfile::Nodes& HyperboloidProfile::profile_nodes(double R) const {
  auto it = nodes_.find(R);
  if (it != nodes_.end()) return it->second;

  std::vector<double> x1, w1, x2, w2;
  gauss_legendre(cfg_.profileNodes, x1, w1);
  gauss_legendre(2 * cfg_.profileNodes, x2, w2);
  ScaledNodes nA = map_nodes(x1, w1, 0.0, R / 2.0);
  ScaledNodes nB = map_nodes(x2, w2, 0.0, R / 2.0);

  auto evalTime = [&](const ScaledNodes& n, double p0) {
    double s = 0.0;
    for (std::size_t i = 0; i < n.x.size(); ++i)
      s += n.w[i] * std::cos(p0 * n.x[i]) * bump_h(2.0 * n.x[i] / R);
    return 2.0 * s;
  };
  auto evalSpace = [&](const ScaledNodes& n, double q) {
    double s = 0.0;
    for (std::size_t i = 0; i < n.x.size(); ++i)
      s += n.w[i] * n.x[i] * n.x[i] * sinc(q * n.x[i]) * bump_h(4.0 * n.x[i] * n.x[i] / (R * R));
    return 4.0 * M_PI * s;
  };
  double scaleT = std::abs(evalTime(nB, 0.0));
  double scaleS = std::abs(evalSpace(nB, 0.0));
  for (double p : {0.0, cutoff_ / 3.0, 2.0 * cutoff_ / 3.0, cutoff_}) {
    if (std::abs(evalTime(nA, p) - evalTime(nB, p)) > cfg_.convergenceTol * scaleT)
      throw Error("QuadratureNonConvergent", "fTime nodes did not converge");
    if (std::abs(evalSpace(nA, p) - evalSpace(nB, p)) > cfg_.convergenceTol * scaleS)
      throw Error("QuadratureNonConvergent", "fSpace nodes did not converge");
  }
  Nodes n;
  n.x = std::move(nB.x);
  n.w = std::move(nB.w);
  return nodes_.emplace(R, std::move(n)).first->second;
}

double HyperboloidProfile::fTime(double R, double p0) const {
  const Nodes& n = profile_nodes(R);
  double s = 0.0;
  for (std::size_t i = 0; i < n.x.size(); ++i)
    s += n.w[i] * std::cos(p0 * n.x[i]) * bump_h(2.0 * n.x[i] / R);
  return 2.0 * s;
}

double HyperboloidProfile::fSpace(double R, double q) const {
  const Nodes& n = profile_nodes(R);
  double s = 0.0;
  for (std::size_t i = 0; i < n.x.size(); ++i)
    s += n.w[i] * n.x[i] * n.x[i] * sinc(q * n.x[i]) * bump_h(4.0 * n.x[i] * n.x[i] / (R * R));
  return 4.0 * M_PI * s;
}

std::complex<double> HyperboloidProfile::pair_integral(double Ra, double Rb, double dt,
                                                       double dxAbs) const {
  double freq = std::abs(dt) + dxAbs + 0.5 * (Ra + Rb);
  int panels = cfg_.radialBasePanels +
               static_cast<int>(std::ceil(cutoff_ * freq / (2.0 * M_PI)));
  std::vector<double> gx, gw;
  gauss_legendre(cfg_.radialNodesPerPanel, gx, gw);

  auto integrate = [&](int P, double* absScale) {
    std::complex<double> total{0.0, 0.0};
    double scale = 0.0;
    double h = cutoff_ / P;
    for (int p = 0; p < P; ++p) {
      ScaledNodes n = map_nodes(gx, gw, p * h, (p + 1) * h);
      for (std::size_t i = 0; i < n.x.size(); ++i) {
        double q = n.x[i];
        double om = omega(q);
        double weight = q * q / std::max(om, 1e-300);
        double base = weight * 4.0 * M_PI * sinc(q * dxAbs) * fTime(Ra, om) *
                      fTime(Rb, om) * fSpace(Ra, q) * fSpace(Rb, q);
        total += n.w[i] * base * std::complex<double>{std::cos(om * dt), std::sin(om * dt)};
        scale += n.w[i] * std::abs(base);
      }
    }
    if (absScale) *absScale = scale;
    return total;
  };
  double absScale = 0.0;
  std::complex<double> coarse = integrate(panels, nullptr);
  std::complex<double> fine = integrate(2 * panels, &absScale);
  if (std::abs(coarse - fine) > cfg_.convergenceTol * (absScale + 1e-300))
    throw Error("QuadratureNonConvergent", "radial pair integral did not converge");
  return fine;
}

std::complex<double> HyperboloidProfile::inner(const TestFunction& f,
                                               const TestFunction& g) const {
  std::complex<double> total{0.0, 0.0};
  for (const Atom& a : f.atoms()) {
    const MinkSupport& ma = mink_of(a);
    for (const Atom& b : g.atoms()) {
      const MinkSupport& mb = mink_of(b);
      Rat Ra = ma.scale, Rb = mb.scale;
      Vec4Q d = mb.center - ma.center;
      Rat dxSq = d.space_norm_sq();
      bool flip = false;
      if (Rb < Ra) std::swap(Ra, Rb);
      Rat dt = d.t;
      if (dt < 0) {
        dt = -dt;
        flip = true;
      }
      PairKey key{Ra, Rb, dt, dxSq};
      auto it = pairCache_.find(key);
      std::complex<double> val;
      if (it != pairCache_.end()) {
        val = it->second;
      } else {
        val = pair_integral(to_double(Ra), to_double(Rb), to_double(dt),
                            std::sqrt(to_double(dxSq)));
        pairCache_.emplace(key, val);
      }
      if (flip) val = std::conj(val);
      total += a.amplitude * b.amplitude * kTwoPiPow4Inv * val;
    }
  }
  return total;
}

double HyperboloidProfile::sigma(const TestFunction& f, const TestFunction& g) const {
  return 2.0 * inner(f, g).imag();
}

std::complex<double> HyperboloidProfile::em_point(const TestFunction& f, double q,
                                                  const std::array<double, 3>& dir) const {
  std::complex<double> total{0.0, 0.0};
  double om = omega(q);
  for (const Atom& a : f.atoms()) {
    const MinkSupport& m = mink_of(a);
    auto y = m.center.to_double();
    double R = to_double(m.scale);
    double py = om * y[0] - q * (dir[0] * y[1] + dir[1] * y[2] + dir[2] * y[3]);
    std::complex<double> phase{std::cos(py), std::sin(py)};
    total += a.amplitude * phase * fTime(R, om) * fSpace(R, q);
  }
  return total / (4.0 * M_PI * M_PI);  // (2pi)^-2
}

EmGrid em_transform(const HyperboloidProfile& prof, const TestFunction& f, int gridN) {
  EmGrid g;
  g.mass = prof.mass();
  g.cutoff = prof.cutoff();
  for (int i = 0; i < gridN; ++i) {
    double q = prof.cutoff() * i / std::max(1, gridN - 1);
    g.q.push_back(q);
    g.value.push_back(prof.em_point(f, q, {0.0, 0.0, 1.0}));
  }
  return g;
}

double wrap_phase(double phi) {
  phi = std::fmod(phi, 2.0 * M_PI);
  if (phi > M_PI) phi -= 2.0 * M_PI;
  if (phi <= -M_PI) phi += 2.0 * M_PI;
  return phi;
}

WeylElement weyl_multiply(const HyperboloidProfile& prof, const WeylElement& a,
                          const WeylElement& b) {
  WeylElement out;
  out.phase = a.phase + b.phase - 0.5 * prof.sigma(a.func, b.func);
  out.func = a.func + b.func;
  return out;
}

WeylElement weyl_inverse(const WeylElement& a) { return {-a.phase, -1.0 * a.func}; }

bool weyl_equal(const WeylElement& a, const WeylElement& b, double phaseTol) {
  return std::abs(wrap_phase(a.phase - b.phase)) <= phaseTol && a.func == b.func;
}

CoronaResult corona_integral(const CausalPoset& p, const Simplex1& b,
                             const TestFunction& fev, const QuadratureConfig& cfg) {
  const auto* support = std::get_if<DoubleConeQ>(&p.geometry(b.support));
  const auto* face0 = std::get_if<DoubleConeQ>(&p.geometry(b.d0));
  const auto* face1 = std::get_if<DoubleConeQ>(&p.geometry(b.d1));
  if (!support || !face0 || !face1)
    throw Error("NoGeometry", "corona integral needs double-cone geometry");

  // Everything runs in offsets from the support center, in exact rationals
  // converted once: translated simplices then produce bitwise-equal values.
  double R = to_double(support->radius);
  auto rel = [&](const Vec4Q& v) { return (v - support->center).to_double(); };
  std::array<double, 4> off0 = rel(face0->center), off1 = rel(face1->center);
  double r0 = to_double(face0->radius), r1 = to_double(face1->radius);
  struct RelAtom {
    double amp;
    std::array<double, 4> off;
    double scale;
  };
  std::vector<RelAtom> atoms;
  for (const Atom& a : fev.atoms()) {
    const auto* m = std::get_if<MinkSupport>(&a.where);
    if (!m) throw Error("BadAtom", "corona integral needs Minkowski atoms");
    atoms.push_back({a.amplitude, rel(m->center), to_double(m->scale)});
  }

  auto inFace = [](const std::array<double, 4>& x, const std::array<double, 4>& cc,
                   double r) {
    double dt = std::abs(x[0] - cc[0]);
    double dx = x[1] - cc[1], dy = x[2] - cc[2], dz = x[3] - cc[3];
    return std::sqrt(dx * dx + dy * dy + dz * dz) + dt < r;
  };
  auto evalAt = [&](const std::array<double, 4>& x) {
    if (inFace(x, off0, r0) || inFace(x, off1, r1)) return 0.0;
    double total = 0.0;
    for (const RelAtom& a : atoms) {
      double dt = x[0] - a.off[0];
      double dx = x[1] - a.off[1], dy = x[2] - a.off[2], dz = x[3] - a.off[3];
      double rr = dx * dx + dy * dy + dz * dz;
      total += a.amp * bump_h(2.0 * dt / a.scale) * bump_h(4.0 * rr / (a.scale * a.scale));
    }
    return std::abs(total);
  };

  // direct sampling of the double cone: |t| with density prop. to (R-|t|)^3,
  // then a uniform point of the ball of radius R-|t|
  std::mt19937_64 rng(cfg.mcSeed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  double volume = 2.0 * M_PI / 3.0 * R * R * R * R;
  double sum = 0.0, sumSq = 0.0;
  for (std::size_t i = 0; i < cfg.mcSamples; ++i) {
    double tAbs = R * (1.0 - std::pow(1.0 - u01(rng), 0.25));
    double t = sym(rng) < 0 ? -tAbs : tAbs;
    double radius = (R - tAbs) * std::cbrt(u01(rng));
    double z = sym(rng);
    double phi = 2.0 * M_PI * u01(rng);
    double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    std::array<double, 4> xa{t, radius * s * std::cos(phi), radius * s * std::sin(phi),
                             radius * z};
    // symmetrized over the x-reflection (reflected simplices match bitwise)
    // and antithetic in t (variance)
    std::array<double, 4> xb{xa[0], -xa[1], xa[2], xa[3]};
    std::array<double, 4> xc{-xa[0], xa[1], xa[2], xa[3]};
    std::array<double, 4> xd{-xa[0], -xa[1], xa[2], xa[3]};
    double v = 0.25 * (evalAt(xa) + evalAt(xb) + evalAt(xc) + evalAt(xd));
    sum += v;
    sumSq += v * v;
  }
  double n = static_cast<double>(cfg.mcSamples);
  CoronaResult res;
  res.value = volume * sum / n;
  double var = std::max(0.0, sumSq / n - (sum / n) * (sum / n));
  res.ciHalfWidth = volume * 1.96 * std::sqrt(var / n);
  res.ciWarning = res.value > 0 && res.ciHalfWidth > cfg.ciRelTol * res.value;
  return res;
}

FieldConnection::FieldConnection(const SimplexTable& table, const Cochain& oneCochain,
                                 const HyperboloidProfile& prof)
    : table_(&table), prof_(&prof), even_(1), odd_(1) {
  auto [ev, od] = split_even_odd(oneCochain);
  even_ = std::move(ev);
  odd_ = std::move(od);
}

double FieldConnection::corona(const Simplex1& b) const {
  Simplex1 key{b.support, std::min(b.d0, b.d1), std::max(b.d0, b.d1)};
  auto it = coronaCache_.find(key);
  if (it != coronaCache_.end()) return it->second;
  CoronaResult res =
      corona_integral(table_->poset(), key, even_.at(b), prof_->config());
  coronaWarnings_ = coronaWarnings_ || res.ciWarning;
  coronaCache_.emplace(key, res.value);
  return res.value;
}

TestFunction FieldConnection::even_part(const Simplex1& b) const { return even_.at(b); }
TestFunction FieldConnection::odd_part(const Simplex1& b) const { return odd_.at(b); }

WeylElement FieldConnection::value(const Simplex1& b) const {
  if (in_nerve1(table_->poset(), b)) return WeylElement::identity();
  WeylElement out;
  out.phase = 0.0;
  out.func = corona(b) * odd_.at(b);
  return out;
}

WeylElement FieldConnection::value(const Generator& g) const {
  return value(letter_simplex(*table_, g));
}

WeylElement FieldConnection::holonomy(const Word& w) const {
  WeylElement acc = WeylElement::identity();
  for (const Generator& g : w.letters) acc = weyl_multiply(*prof_, acc, value(g));
  return acc;
}

WeylElement holonomy(const HyperboloidProfile& prof,
                     const std::map<Simplex1, WeylElement>& assignment,
                     const SimplexTable& t, const Word& w) {
  WeylElement acc = WeylElement::identity();
  for (const Generator& g : w.letters) {
    auto it = assignment.find(letter_simplex(t, g));
    if (it == assignment.end()) throw Error("NoAssignment", "letter without a value");
    acc = weyl_multiply(prof, acc, it->second);
  }
  return acc;
}

NontrivialReport certify_nontrivial(const HyperboloidProfile& prof, const CausalPoset& p,
                                    const Cochain& invariant0, const Simplex1& b) {
  const auto* r0 = std::get_if<DoubleConeQ>(&p.geometry(b.d0));
  const auto* r1 = std::get_if<DoubleConeQ>(&p.geometry(b.d1));
  if (!r0 || !r1 || r0->radius != r1->radius)
    throw Error("BadWitness", "faces must be translates of one double cone");
  Vec4Q y = r0->center - r1->center;

  NontrivialReport rep;
  TestFunction g = coboundary_value(invariant0, b);  // (delta f)^odd_b
  rep.direct = prof.inner(g, g).real();

  const TestFunction& base = invariant0.at(b.d1);
  if (base.atoms().size() != 1)
    throw Error("BadWitness", "factorized route expects a single-atom 0-cochain value");
  const Atom& atom = base.atoms()[0];
  const auto* m = std::get_if<MinkSupport>(&atom.where);
  if (!m) throw Error("BadWitness", "Minkowski atom required");
  double R = to_double(m->scale);
  double yt = to_double(y.t);
  double yx = std::sqrt(to_double(y.space_norm_sq()));

  // integral |E_m f|^2 |e^{ip.y} - 1|^2 dOmega_m, angular part done in closed
  // form: 8 pi (1 - cos(omega yt) sinc(q |y|))
  double freq = std::abs(yt) + yx + R;
  int panels = prof.config().radialBasePanels +
               static_cast<int>(std::ceil(prof.cutoff() * freq / (2.0 * M_PI)));
  std::vector<double> gx, gw;
  gauss_legendre(prof.config().radialNodesPerPanel, gx, gw);
  auto integrate = [&](int P) {
    double total = 0.0;
    double h = prof.cutoff() / P;
    for (int panel = 0; panel < P; ++panel) {
      ScaledNodes n = map_nodes(gx, gw, panel * h, (panel + 1) * h);
      for (std::size_t i = 0; i < n.x.size(); ++i) {
        double q = n.x[i];
        double om = prof.omega(q);
        double ts = prof.fTime(R, om) * prof.fSpace(R, q);
        double angular = 8.0 * M_PI * (1.0 - std::cos(om * yt) * sinc(q * yx));
        total += n.w[i] * q * q / std::max(om, 1e-300) * ts * ts * angular;
      }
    }
    return total;
  };
  double coarse = integrate(panels);
  double fine = integrate(2 * panels);
  if (std::abs(coarse - fine) > prof.config().convergenceTol * (std::abs(fine) + 1.0))
    throw Error("QuadratureNonConvergent", "factorized norm did not converge");
  rep.factorized = atom.amplitude * atom.amplitude * kTwoPiPow4Inv * fine;
  rep.relErr = std::abs(rep.direct - rep.factorized) /
               std::max({std::abs(rep.direct), std::abs(rep.factorized), 1e-300});
  if (rep.direct == 0.0 && rep.factorized == 0.0) rep.relErr = 0.0;
  return rep;
}

std::optional<NonflatWitness> certify_nonflat(const FieldConnection& conn,
                                              std::size_t searchCap, double tol) {
  const CausalPoset& p = conn.table().poset();
  const HyperboloidProfile& prof = conn.profile();
  Enum2Result e2 = enumerate_2simplices(p, searchCap);
  for (const auto& [c, nerve] : e2.simplices) {
    if (nerve) continue;
    WeylElement u0 = conn.value(c.f0);
    WeylElement u1 = conn.value(c.f1);
    WeylElement u2 = conn.value(c.f2);
    WeylElement lhs = weyl_multiply(prof, u0, u2);
    TestFunction diff = lhs.func - u1.func;
    double phaseDiff = std::abs(wrap_phase(lhs.phase - u1.phase));
    double normSq = diff.zero() ? 0.0 : prof.inner(diff, diff).real();
    if (normSq > tol || phaseDiff > tol)
      return NonflatWitness{c, normSq, phaseDiff};
  }
  return std::nullopt;
}

WeylBackend::WeylBackend(const FieldConnection& conn, double localityTol,
                         double separationTol)
    : conn_(&conn), localityTol_(localityTol), separationTol_(separationTol) {}

bool WeylBackend::verify(int loopCap, std::size_t pairCap) {
  const SimplexTable& t = conn_->table();
  const CausalPoset& p = t.poset();
  const HyperboloidProfile& prof = conn_->profile();
  // involution: u(b~) u(b) = 1 exactly
  for (int i = 0; i < t.tangent_count(); ++i) {
    Simplex1 b = t.canon(i);
    WeylElement prod = weyl_multiply(prof, conn_->value(opposite(b)), conn_->value(b));
    if (!weyl_equal(prod, WeylElement::identity(), 1e-12)) return false;
  }
  // locality on causally disjoint loop pairs
  std::size_t pairs = 0;
  for (int o = 0; o < p.size() && pairs < pairCap; ++o)
    for (int a = o + 1; a < p.size() && pairs < pairCap; ++a) {
      if (!p.perp(o, a)) continue;
      auto lo = enumerate_reduced_loops(t, loopCap, o);
      auto la = enumerate_reduced_loops(t, loopCap, a);
      for (const Word& g : lo) {
        for (const Word& h : la) {
          if (pairs >= pairCap) break;
          ++pairs;
          double phase = commutator_phase(g, h);
          if (std::abs(phase) > localityTol_) return false;
        }
      }
    }
  verified_ = true;
  return true;
}

double WeylBackend::commutator_phase(const Word& a, const Word& b) const {
  WeylElement ha = conn_->holonomy(a);
  WeylElement hb = conn_->holonomy(b);
  return conn_->profile().sigma(ha.func, hb.func);
}

std::optional<double> WeylBackend::separate(const Word& a, const Word& b) const {
  if (!verified_) return std::nullopt;
  WeylElement ha = conn_->holonomy(a);
  WeylElement hb = conn_->holonomy(b);
  if (!(ha.func == hb.func)) {
    TestFunction diff = ha.func - hb.func;
    double gap = std::sqrt(std::max(0.0, conn_->profile().inner(diff, diff).real()));
    if (gap > separationTol_) return gap;
    // rounding-level function differences fall through to the phase test
  }
  double dphi = std::abs(wrap_phase(ha.phase - hb.phase));
  if (dphi > separationTol_) return dphi;
  return std::nullopt;
}

}  // namespace loopnet
