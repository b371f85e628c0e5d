#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "loopnet/quotient.hpp"

namespace loopnet {

// Generating set of the loop subgroup sitting over (K|o), up to a length cap.
struct Fibre {
  int base = -1;
  int lengthCap = 0;
  std::vector<Word> generators;  // reduced, inverse-paired, sorted
};
Fibre fibre_generators(const SimplexTable& t, int o, int lengthCap);

// Every generator of the o-fibre is a loop of (K|a); precondition o <= a.
bool check_isotony(const SimplexTable& t, int o, int a, int lengthCap);

// Numeric backend hook: commutator phase of two loop holonomies.
using CommutatorPhase = std::function<double(const Word&, const Word&)>;

struct CausalityEntry {
  int o = -1, a = -1;
  std::size_t pairs = 0;
  std::size_t certified = 0;   // certified Equal
  double maxPhase = 0.0;       // backend |commutator phase| maximum
  bool ok(double tol) const { return certified == pairs && maxPhase <= tol; }
};
CausalityEntry check_causality(const SimplexTable& t, int o, int a, int lengthCap,
                               const CommutatorPhase& backend = {},
                               std::size_t pairCap = 0);

struct CovarianceEntry {
  int group = -1, o = -1;
  bool bijective = false;
  bool inclusionSquare = false;  // alpha_g . j = j . alpha_g on generators
};
struct SymmetryNetReport {
  std::vector<CovarianceEntry> entries;
  bool compositionLaw = false;  // alpha_{gh} = alpha_g alpha_h on fibres
  bool allOk() const;
};
SymmetryNetReport symmetry_on_net(const SimplexTable& t, const SymmetryAction& act,
                                  int lengthCap);

struct NetReport {
  std::vector<std::pair<int, int>> isotonyChecked;  // comparable pairs, all pass
  bool isotonyOk = false;
  std::vector<CausalityEntry> causality;
  SymmetryNetReport covariance;
};
NetReport build_net_report(const SimplexTable& t, const SymmetryAction* act,
                           int lengthCap, const CommutatorPhase& backend = {},
                           std::size_t pairCap = 0);

Word act_on_word(const SimplexTable& t, const SymmetryAction& act, int g, const Word& w);

}  // namespace loopnet
