#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "loopnet/cochain.hpp"
#include "loopnet/words.hpp"

namespace loopnet {

struct QuadratureConfig {
  double cutoff = 0.0;            // momentum cutoff; 0 = auto (40 / min scale)
  int profileNodes = 96;          // Gauss-Legendre nodes for the radial profiles
  int radialBasePanels = 6;       // baseline panels of the 1-D momentum integrals
  int radialNodesPerPanel = 16;
  std::size_t mcSamples = 200000; // corona Monte Carlo
  std::uint64_t mcSeed = 0xC0FFEEull;
  double convergenceTol = 1e-8;   // node-doubling agreement (vs. integrand scale)
  double ciRelTol = 0.02;         // corona CI warning threshold
};

// Cached radial transforms of the bump profile on the mass hyperboloid:
//   fTime(R, p0)  =  integral e^{i p0 t} h(2t/R) dt            (real, even)
//   fSpace(R, q)  =  integral e^{-i q.x} h(4|x|^2/R^2) d^3x    (real, radial)
// Per-scale node caches are validated by node doubling at construction.
class HyperboloidProfile {
 public:
  HyperboloidProfile(double mass, QuadratureConfig cfg, double minScale = 1.0);

  double mass() const { return mass_; }
  double cutoff() const { return cutoff_; }
  const QuadratureConfig& config() const { return cfg_; }
  double omega(double q) const { return std::sqrt(q * q + mass_ * mass_); }

  double fTime(double R, double p0) const;
  double fSpace(double R, double q) const;

  // <E_m f, E_m g> reduced to cached 1-D radial integrals per atom pair.
  std::complex<double> inner(const TestFunction& f, const TestFunction& g) const;
  // sigma(f,g) = 2 Im <E_m f, E_m g>; commutator of Weyl elements is the
  // central phase e^{-i sigma}.
  double sigma(const TestFunction& f, const TestFunction& g) const;

  std::complex<double> em_point(const TestFunction& f, double q,
                                const std::array<double, 3>& dir) const;

 private:
  struct Nodes {
    std::vector<double> x, w;
  };
  const Nodes& profile_nodes(double R) const;
  std::complex<double> pair_integral(double Ra, double Rb, double dt, double dxAbs) const;
  struct PairKey {
    Rat Ra, Rb, dt, dxSq;
    bool operator<(const PairKey& o) const;
  };

  double mass_;
  QuadratureConfig cfg_;
  double cutoff_;
  mutable std::map<double, Nodes> nodes_;       // per scale, [0, R/2]
  mutable std::map<PairKey, std::complex<double>> pairCache_;
};

struct EmGrid {
  std::vector<double> q;
  std::vector<std::complex<double>> value;
  double mass = 0.0, cutoff = 0.0;
};
// E_m(f) sampled along the z-axis direction on a uniform radial grid.
EmGrid em_transform(const HyperboloidProfile& prof, const TestFunction& f, int gridN);

// Unitary model exp(i phase) exp(i Phi(func)); composition uses the CCR phase.
struct WeylElement {
  double phase = 0.0;
  TestFunction func;
  static WeylElement identity() { return {}; }
};
WeylElement weyl_multiply(const HyperboloidProfile& prof, const WeylElement& a,
                          const WeylElement& b);
WeylElement weyl_inverse(const WeylElement& a);
double wrap_phase(double phi);  // into (-pi, pi]
bool weyl_equal(const WeylElement& a, const WeylElement& b, double phaseTol = 1e-9);

// Monte Carlo volume integral of |fev| over the corona of b (the support
// region minus both face regions). The estimator is symmetrized under the
// spatial x-reflection so that reflected simplices get bitwise-equal values.
struct CoronaResult {
  double value = 0.0;
  double ciHalfWidth = 0.0;
  bool ciWarning = false;
};
CoronaResult corona_integral(const CausalPoset& p, const Simplex1& b,
                             const TestFunction& fev, const QuadratureConfig& cfg);

// The field connection induced by an invariant 1-cochain f:
//   u(b) = (0, c_b * f^odd_b),  c_b = integral over the corona of |f^ev_b|;
// identity on the nerve. Corona constants are cached per unordered face pair.
class FieldConnection {
 public:
  FieldConnection(const SimplexTable& table, const Cochain& oneCochain,
                  const HyperboloidProfile& prof);

  const SimplexTable& table() const { return *table_; }
  const HyperboloidProfile& profile() const { return *prof_; }

  WeylElement value(const Simplex1& b) const;
  WeylElement value(const Generator& g) const;
  WeylElement holonomy(const Word& w) const;
  double corona(const Simplex1& b) const;
  TestFunction even_part(const Simplex1& b) const;
  TestFunction odd_part(const Simplex1& b) const;
  bool coronaWarnings() const { return coronaWarnings_; }

 private:
  const SimplexTable* table_;
  const HyperboloidProfile* prof_;
  Cochain even_, odd_;
  mutable std::map<Simplex1, double> coronaCache_;
  mutable bool coronaWarnings_ = false;
};

WeylElement holonomy(const HyperboloidProfile& prof,
                     const std::map<Simplex1, WeylElement>& assignment,
                     const SimplexTable& t, const Word& w);

struct NontrivialReport {
  double direct = 0.0;
  double factorized = 0.0;
  double relErr = 0.0;
};
// ||E_m((delta f)^odd_b)||^2 for a 1-simplex whose faces are translates by y,
// computed through the generic atom-pair route and through the factorized
// |e^{ip.y}-1|^2 identity.
NontrivialReport certify_nontrivial(const HyperboloidProfile& prof, const CausalPoset& p,
                                    const Cochain& invariant0, const Simplex1& b);

struct NonflatWitness {
  Simplex2 simplex;
  double mismatchNormSq = 0.0;  // ||E_m(F(d0) + F(d2) - F(d1))||^2
  double phaseDiff = 0.0;
};
std::optional<NonflatWitness> certify_nonflat(const FieldConnection& conn,
                                              std::size_t searchCap, double tol);

// Quotient separator backed by the field connection. Soundness is verified on
// first use: u(b~) = u(b)^{-1} structurally and |sigma| below localityTol on
// causally disjoint loop pairs up to the given caps.
class WeylBackend {
 public:
  WeylBackend(const FieldConnection& conn, double localityTol = 1e-6,
              double separationTol = 1e-3);
  // verify commutation on perp fibre pairs (loop length <= loopCap)
  bool verify(int loopCap = 2, std::size_t pairCap = 50);
  double commutator_phase(const Word& a, const Word& b) const;
  std::optional<double> separate(const Word& a, const Word& b) const;

 private:
  const FieldConnection* conn_;
  double localityTol_, separationTol_;
  bool verified_ = false;
};

}  // namespace loopnet
