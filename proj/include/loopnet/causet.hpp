#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "loopnet/rational.hpp"

namespace loopnet {

// Geometric payloads attached to poset elements.
struct DoubleConeQ {
  Vec4Q center;
  Rat radius;  // region {p : |p_vec - c_vec| + |p_t - c_t| < radius}
};
struct ArcQ {
  int n = 0;       // circle vertices
  int start = 0;   // arc [start, start+length) mod n
  int length = 0;  // 0 < length < n
};
struct PointSetQ {
  std::vector<Vec4Q> points;  // nonempty subset of a sprinkled causal set
};
using RegionGeometry = std::variant<DoubleConeQ, ArcQ, PointSetQ>;

bool cone_leq(const DoubleConeQ& a, const DoubleConeQ& b);   // a included in b
bool cone_perp(const DoubleConeQ& a, const DoubleConeQ& b);  // spacelike closures
bool arc_leq(const ArcQ& a, const ArcQ& b);
bool arc_perp(const ArcQ& a, const ArcQ& b);
// e <= e' in the closed forward cone order of the ambient causal set.
bool point_precedes(const Vec4Q& e, const Vec4Q& f);

// Finite causal poset: reflexive-transitive-antisymmetric order matrix plus an
// irreflexive, symmetric, order-stable disjointness matrix. Immutable once
// built.
class CausalPoset {
 public:
  int size() const { return static_cast<int>(labels_.size()); }
  bool leq(int a, int b) const { return leq_[a][b] != 0; }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  bool perp(int a, int b) const { return perp_[a][b] != 0; }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  const std::string& label(int e) const { return labels_[e]; }
  int index_of(const std::string& label) const;  // -1 when absent

  bool has_geometry() const { return !geometry_.empty(); }
  const RegionGeometry& geometry(int e) const { return geometry_[e]; }

  std::vector<int> lower_set(int o) const;
  bool is_maximal(int e) const;
  bool is_minimal(int e) const;

  // Raw construction; relations are taken as given (validate_poset reports
  // violations rather than throwing).
  static CausalPoset from_matrices(std::vector<std::string> labels,
                                   std::vector<std::vector<std::uint8_t>> leq,
                                   std::vector<std::vector<std::uint8_t>> perp,
                                   std::vector<RegionGeometry> geometry = {});

  // Convenience: reflexive-transitive closure of `leqPairs`, symmetric closure
  // of `perpPairs` followed by downward stabilization.
  static CausalPoset from_relations(
      std::vector<std::string> labels,
      const std::vector<std::pair<int, int>>& leqPairs,
      const std::vector<std::pair<int, int>>& perpPairs,
      std::vector<RegionGeometry> geometry = {});

  std::string canonical_adjacency() const;  // stable text form for golden tests

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint8_t>> leq_;
  std::vector<std::vector<std::uint8_t>> perp_;
  std::vector<RegionGeometry> geometry_;
};

struct Violation {
  std::string axiom;        // "reflexive", "transitive", "antisymmetric",
                            // "perp-irreflexive", "perp-symmetric",
                            // "perp-stability", "common-minorant"
  std::vector<int> elems;   // witnesses
};

// Which of the four classical index-set properties hold (recorded, never
// enforced; a finite poset cannot satisfy all of them).
struct RegularityRecord {
  bool properSubelement = false;   // every o has some a < o
  bool properSuperelement = false; // every o has some x > o
  bool perpComplement = false;     // every o has some a with a perp o
  bool perpExtension = false;      // a perp o implies some x >= a, x perp o, x != a
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool pathwiseConnected = false;
  RegularityRecord regularity;
  bool valid() const { return violations.empty(); }
};

ValidationReport validate_poset(const CausalPoset& p);
bool is_pathwise_connected(const CausalPoset& p);

struct DoubleConeSpec {
  std::string label;  // optional; autogenerated when empty
  Vec4Q center;
  Rat radius;
};
CausalPoset build_minkowski_lattice(const std::vector<DoubleConeSpec>& cones);

CausalPoset build_circle(int n, int minLength, int maxLength);

struct CausalSetSpec {
  std::vector<Vec4Q> points;
  int maxSubsetSize = 2;
};
std::vector<Vec4Q> sprinkle_points(int count, std::uint64_t seed, long long boxExtent);
CausalPoset build_causal_set_poset(const CausalSetSpec& spec, std::size_t elementCap = 4096);

// Injective map preserving <= and preserving/reflecting perp.
struct PosetMorphism {
  const CausalPoset* source = nullptr;
  const CausalPoset* target = nullptr;
  std::vector<int> map;

  int apply(int e) const { return map[e]; }
  std::vector<std::string> violations() const;  // empty iff a valid morphism
};

struct RestrictedPoset {
  CausalPoset poset;
  std::vector<int> toAmbient;  // restricted index -> ambient index
  PosetMorphism inclusion(const CausalPoset& ambient) const;
};
RestrictedPoset restrict_poset(const CausalPoset& p, int o);

// Geometric realization of one group element.
struct GeomTranslation { Vec4Q offset; };
struct GeomRotationTurns { Rat turns; };      // circle rotation
struct GeomReflectionX {};                    // (t,x,y,z) -> (t,-x,y,z)
using GeomMap =
    std::variant<std::monostate, GeomTranslation, GeomRotationTurns, GeomReflectionX>;

// Finite group acting on a poset by causal automorphisms.
class SymmetryAction {
 public:
  int order() const { return static_cast<int>(perms_.size()); }
  int identity() const { return 0; }
  int mul(int g, int h) const { return mult_[g][h]; }  // g after h
  int inv(int g) const { return inverse_[g]; }
  int act(int g, int e) const { return perms_[g][e]; }
  const GeomMap& geom(int g) const { return geoms_[g]; }
  const std::string& name(int g) const { return names_[g]; }

  struct Generator {
    std::string name;
    std::vector<int> perm;
    GeomMap geom;
  };
  // Closes the generators under composition (throws PosetTooLarge past cap).
  static SymmetryAction generate(const CausalPoset& p, const std::vector<Generator>& gens,
                                 int cap = 512);
  static SymmetryAction trivial(const CausalPoset& p);

  std::vector<std::string> violations(const CausalPoset& p) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> perms_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inverse_;
  std::vector<GeomMap> geoms_;
};

struct OrbitStabilizer {
  std::vector<int> orbit;       // sorted element ids
  std::vector<int> stabilizer;  // group element ids, closed under product/inverse
};
OrbitStabilizer orbit_and_stabilizer(const SymmetryAction& act, int o);

// Partial geometric translation on a double-cone poset: the image element, if
// the translated region is present.
std::optional<int> translate_element(const CausalPoset& p, int e, const Vec4Q& offset);

}  // namespace loopnet
