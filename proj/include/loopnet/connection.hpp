#pragma once

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loopnet/net.hpp"
#include "loopnet/weyl.hpp"

namespace loopnet {

using MatrixU = Eigen::MatrixXcd;

// Backend-tagged unitary: exactly one member engaged.
struct UnitaryValue {
  std::optional<WeylElement> weyl;
  std::optional<MatrixU> mat;
  static UnitaryValue of(WeylElement w) { return {std::move(w), std::nullopt}; }
  static UnitaryValue of(MatrixU m) { return {std::nullopt, std::move(m)}; }
};

// Multiplication/inverse/equality for either backend; matrix equality is
// operator-norm based, Weyl equality is exact on functions with a phase
// tolerance.
class UnitaryContext {
 public:
  explicit UnitaryContext(const HyperboloidProfile* prof = nullptr, double matTol = 1e-8,
                          double weylPhaseTol = 1e-9)
      : prof_(prof), matTol_(matTol), weylPhaseTol_(weylPhaseTol) {}

  UnitaryValue mul(const UnitaryValue& a, const UnitaryValue& b) const;
  UnitaryValue inv(const UnitaryValue& a) const;
  UnitaryValue identity_like(const UnitaryValue& a) const;
  bool eq(const UnitaryValue& a, const UnitaryValue& b) const;
  // scalar deviation: operator norm of difference / |wrapped phase gap| + L2
  double deviation(const UnitaryValue& a, const UnitaryValue& b) const;
  bool is_unitary(const UnitaryValue& a) const;

 private:
  const HyperboloidProfile* prof_;
  double matTol_, weylPhaseTol_;
};

// Paths from a pole to every non-maximal element (faces of tangent simplices
// are never maximal, so these are all the endpoints loops can use).
struct PathFrame {
  int pole = -1;
  std::map<int, Word> paths;  // target element -> word pole -> target
};
PathFrame build_path_frame(const SimplexTable& t, int pole);

struct PathFrameSystem {
  std::map<int, PathFrame> frames;  // per non-maximal pole
};

// Loop representation backend.
struct LoopRep {
  std::function<UnitaryValue(const Word&)> eval;
  UnitaryContext ctx;
};
LoopRep make_weyl_rep(const FieldConnection& conn);
LoopRep make_matrix_rep(const SimplexTable& t, std::map<int, MatrixU> perCanon,
                        double matTol = 1e-8);

// Ad-action of a symmetry on backend values (conjugation by Gamma for the
// matrix backend, geometric transport at the test-function level for Weyl).
using SymmetryAd = std::function<UnitaryValue(int g, const UnitaryValue&)>;
SymmetryAd matrix_ad(const SymmetryAction& act, std::map<int, MatrixU> gamma);
SymmetryAd weyl_ad(const SymmetryAction& act);

struct Connection1Cochain {
  std::map<Simplex1, UnitaryValue> values;  // on T1; nerve extension = identity
  const UnitaryValue& at(const Simplex1& b) const;
};
// u(b) := w(p_(o,d0 b) b p~_(o,d1 b)) over the frame's pole.
Connection1Cochain connection_from_rep(const SimplexTable& t, const LoopRep& rep,
                                       const PathFrame& frame);
UnitaryValue connection_holonomy(const SimplexTable& t, const UnitaryContext& ctx,
                                 const Connection1Cochain& u, const Word& w);

struct ConnectionSystem {
  std::map<int, Connection1Cochain> perBase;
};
ConnectionSystem build_connection_system(const SimplexTable& t, const LoopRep& rep,
                                         const PathFrameSystem& frames);
ConnectionSystem constant_system(const SimplexTable& t, const Connection1Cochain& u);

struct SystemCheckEntry {
  std::string check;  // "causality" | "covariance" | "recovery"
  double deviation = 0.0;
  std::string detail;
};
struct SystemCheckReport {
  std::vector<SystemCheckEntry> entries;
  double maxDeviation = 0.0;
  bool ok(double tol) const { return maxDeviation <= tol; }
};
// Definition-4.7-style checks: perp loop commutation across bases, covariance
// through the Ad realization, and base-point holonomy recovery.
SystemCheckReport check_system(const SimplexTable& t, const ConnectionSystem& sys,
                               const UnitaryContext& ctx, const LoopRep* rep,
                               const SymmetryAction* act, const SymmetryAd* ad,
                               int loopCap, std::size_t pairCap = 400);

// Covariant path-frame construction (orbit representatives, stabilizer
// invariant paths, transported frames). Throws Obstructed when no invariant
// path exists for some orbit pair.
PathFrameSystem build_covariant_system(const SimplexTable& t, const SymmetryAction& act,
                                       int searchLen = 6);
// Bounded exhaustive search for a path o -> a all of whose letters are fixed
// by every element of the joint stabilizer.
std::optional<Word> check_obstruction(const SimplexTable& t, const SymmetryAction& act,
                                      int o, int a, int searchLen);
bool system_is_covariant(const SimplexTable& t, const PathFrameSystem& frames,
                         const SymmetryAction& act);

// Gauge transformation g_a(o); composition is pointwise.
struct GaugeTransformation {
  std::map<int, std::map<int, UnitaryValue>> fields;  // a -> (o -> g_a(o))
  const UnitaryValue& at(int a, int o) const;
};
GaugeTransformation gauge_compose(const UnitaryContext& ctx, const GaugeTransformation& g,
                                  const GaugeTransformation& h);
// u^g_o(b) := g_o(d0 b) u_o(b) g_o*(d1 b)
ConnectionSystem apply_gauge(const SimplexTable& t, const UnitaryContext& ctx,
                             const ConnectionSystem& sys, const GaugeTransformation& g);
// The gauge induced by a change of path-frame systems: g_o(a) = w(q_(o,a) p~_(o,a)).
GaugeTransformation frame_change_gauge(const SimplexTable& t, const LoopRep& rep,
                                       const PathFrameSystem& P, const PathFrameSystem& Q);
// Equivariance axiom: g_{s(a)}(s(o)) = Ad_s(g_a(o)) for all entries.
bool gauge_is_equivariant(const UnitaryContext& ctx, const GaugeTransformation& g,
                          const SymmetryAction& act, const SymmetryAd& ad);

// {g_a(a) | g in collection, a <= o}, deduplicated by backend equality.
std::vector<UnitaryValue> gauge_group_generators(
    const SimplexTable& t, const UnitaryContext& ctx,
    const std::vector<GaugeTransformation>& gauges, int o);

}  // namespace loopnet
