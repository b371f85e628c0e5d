#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loopnet/simplex.hpp"

namespace loopnet {

// Letter of F(K): an index into the canonical tangent section plus an
// orientation. A letter whose simplex has equal faces is self-inverse.
struct Generator {
  int canon = -1;
  bool opp = false;
  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

// Word b_n ... b_1, stored in display order: letters[0] = b_n (applied last),
// letters.back() = b_1 (applied first). Multiplication w1*w2 concatenates with
// w2 rightmost, i.e. w2 acts first. This is the single largest source of
// sign errors in path bookkeeping; every path routine below is written against
// this convention.
struct Word {
  std::vector<Generator> letters;
  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

inline Simplex1 letter_simplex(const SimplexTable& t, const Generator& g) {
  return t.simplex(g.canon, g.opp);
}
inline Generator letter_inverse(const SimplexTable& t, const Generator& g) {
  if (t.involutive(g.canon)) return g;
  return {g.canon, !g.opp};
}
inline Generator generator_of(const SimplexTable& t, const Simplex1& b) {
  auto hit = t.lookup(b);
  if (!hit) throw Error("NotTangent", "simplex is not a tangent 1-simplex");
  return {hit->first, t.involutive(hit->first) ? false : hit->second};
}

Word multiply(const Word& w1, const Word& w2);
Word inverse(const SimplexTable& t, const Word& w);
Word reduce(const SimplexTable& t, const Word& w);
bool is_reduced(const SimplexTable& t, const Word& w);

// Element ids of the supports of the letters of reduce(w), sorted unique.
std::vector<int> word_support(const SimplexTable& t, const Word& w);

struct PathInfo {
  bool isPath = false;
  bool everywhere = false;  // the empty word
  int start = -1, end = -1;
};
PathInfo is_path(const SimplexTable& t, const Word& w);

struct LoopBase {
  bool everywhere = false;
  int base = -1;
};
std::optional<LoopBase> is_loop(const SimplexTable& t, const Word& w);

// Partition of reduce(w) into consecutive loop blocks (display order), when
// one exists; membership in L(K) is equivalent to its existence.
std::optional<std::vector<Word>> loop_block_decomposition(const SimplexTable& t,
                                                          const Word& w);
inline bool in_loop_group(const SimplexTable& t, const Word& w) {
  return loop_block_decomposition(t, w).has_value();
}

// Witness dominators (o1, o2) with |w1| <= o1, |w2| <= o2 and o1 perp o2,
// computed on reduced words.
std::optional<std::pair<int, int>> word_perp(const SimplexTable& t, const Word& w1,
                                             const Word& w2);

Word apply_morphism(const SimplexTable& src, const SimplexTable& dst,
                    const PosetMorphism& psi, const Word& w);

// All nonempty reduced loops of length <= lengthCap, letters restricted to
// supports <= supportBound when given, deduplicated by inverse pairing
// (the lexicographically smaller of {w, w^-1} is kept). Sorted.
std::vector<Word> enumerate_reduced_loops(const SimplexTable& t, int lengthCap,
                                          std::optional<int> supportBound);

// CLI literal: space-separated `(support;d0,d1)` tokens with optional `~`
// prefix for the opposite orientation; leftmost token is b_n.
Word parse_word(const SimplexTable& t, const std::string& text);
std::string format_word(const SimplexTable& t, const Word& w);

}  // namespace loopnet
