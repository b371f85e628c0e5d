#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "loopnet/causet.hpp"

namespace loopnet {

// 1-simplex (|b|; d0, d1): a segment from d1 to d0 inside |b|.
struct Simplex1 {
  int support = -1;
  int d0 = -1;
  int d1 = -1;
  friend bool operator==(const Simplex1&, const Simplex1&) = default;
  friend auto operator<=>(const Simplex1&, const Simplex1&) = default;
};

enum class SimplexClass { Nerve, Tangent, Degenerate };

// Nerve: faces comparable and the greater face equals the support. The nerve
// is closed under opposite, so T1 = Sigma1 \ N1 is as well.
SimplexClass classify1(const CausalPoset& p, const Simplex1& b);
inline bool in_nerve1(const CausalPoset& p, const Simplex1& b) {
  return classify1(p, b) != SimplexClass::Tangent;
}
inline bool in_tangent1(const CausalPoset& p, const Simplex1& b) {
  return classify1(p, b) == SimplexClass::Tangent;
}

inline Simplex1 opposite(const Simplex1& b) { return {b.support, b.d1, b.d0}; }
inline Simplex1 degeneracy0(int a) { return {a, a, a}; }

struct Classified1 {
  Simplex1 simplex;
  SimplexClass cls;
};
// All of Sigma1, lexicographic in (support, d0, d1).
std::vector<Classified1> enumerate_1simplices(const CausalPoset& p);

// 2-simplex as support plus three 1-simplex faces subject to the face
// compatibility equalities:
//   d0(f0)=d0(f1)=:v0   d1(f0)=d0(f2)=:v1   d1(f1)=d1(f2)=:v2
struct Simplex2 {
  int support = -1;
  Simplex1 f0, f1, f2;
  int v0() const { return f0.d0; }
  int v1() const { return f0.d1; }
  int v2() const { return f1.d1; }
  friend bool operator==(const Simplex2&, const Simplex2&) = default;
  friend auto operator<=>(const Simplex2&, const Simplex2&) = default;
};
std::optional<Simplex2> make_simplex2(const CausalPoset& p, int support, Simplex1 f0,
                                      Simplex1 f1, Simplex1 f2);
// Nerve 2-simplex: all faces in N1 and the support equals the greatest vertex.
bool in_nerve2(const CausalPoset& p, const Simplex2& c);

struct Enum2Result {
  std::vector<std::pair<Simplex2, bool>> simplices;  // (simplex, nerve flag)
  bool truncated = false;
};
Enum2Result enumerate_2simplices(const CausalPoset& p, std::size_t cap);

Simplex1 morphism_image(const PosetMorphism& psi, const Simplex1& b);

// Canonical tangent alphabet of a poset: a fixed section of T1 / opposite.
// Generators are indices into the section plus an orientation flag; a simplex
// with equal faces is its own opposite (self-inverse letter).
class SimplexTable {
 public:
  explicit SimplexTable(const CausalPoset& p);

  const CausalPoset& poset() const { return *poset_; }
  int tangent_count() const { return static_cast<int>(canon_.size()); }
  const Simplex1& canon(int i) const { return canon_[i]; }
  bool involutive(int i) const { return canon_[i].d0 == canon_[i].d1; }

  // Simplex of a generator index with orientation.
  Simplex1 simplex(int canonIdx, bool opp) const {
    return opp ? opposite(canon_[canonIdx]) : canon_[canonIdx];
  }
  // Lookup: tangent simplex -> (canon index, orientation); nullopt for nerve.
  std::optional<std::pair<int, bool>> lookup(const Simplex1& b) const;

  // Bitset of elements >= e, and fast existence of a perp dominator pair.
  bool has_perp_dominators(const std::vector<int>& supportA,
                           const std::vector<int>& supportB,
                           std::pair<int, int>* witness = nullptr) const;

 private:
  const CausalPoset* poset_;
  std::vector<Simplex1> canon_;
  std::vector<std::vector<std::uint64_t>> upMask_;    // per element
  std::vector<std::vector<std::uint64_t>> perpMask_;  // per element
  std::size_t words_ = 0;
};

}  // namespace loopnet
