#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loopnet/words.hpp"

namespace loopnet {

// w [p,q] w~  with p, q causally disjoint loops; in CL(K) when w is in L(K).
struct CausalCommutator {
  Word conjugator, p, q;
  Word word;  // w p q p~ q~ w~
  bool inCL = false;
  std::pair<int, int> witness;  // perp dominators of (p, q)
};
CausalCommutator make_causal_commutator(const SimplexTable& t, const Word& w,
                                        const Word& p, const Word& q);

// One legal rewrite on a freely reduced word. Moves act on display-order
// positions; every move is followed by free reduction.
struct RewriteMove {
  enum class Kind { SwapLoops, InsertPair };
  Kind kind = Kind::SwapLoops;
  std::size_t pos = 0;       // start of the affected segment
  std::size_t lenP = 0;      // SwapLoops: length of the left block
  std::size_t lenQ = 0;      // SwapLoops: length of the right block
  std::pair<int, int> witness{-1, -1};
  Generator inserted;        // InsertPair: g g^-1 inserted at pos
};

struct RewriteCertificate {
  Word start;  // reduce(a * inverse(b))
  std::vector<RewriteMove> moves;
};

struct EqualityBudget {
  int depth = 6;
  std::size_t width = 20000;
  std::size_t lengthCap = 40;
};

// Distinguishing homomorphism hook: returns a gap measure when the two words
// are provably different in the quotient, nullopt when it cannot tell.
using Separator =
    std::function<std::optional<double>(const Word& a, const Word& b)>;

struct QuotientVerdict {
  enum class Kind { Equal, Unequal, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<RewriteCertificate> certificate;  // Equal
  std::string separator;                          // Unequal: which homomorphism
  double gap = 0.0;                               // Unequal: separator gap
  std::size_t explored = 0;
};

QuotientVerdict quotient_equal(const SimplexTable& t, const Word& a, const Word& b,
                               const EqualityBudget& budget = {},
                               const Separator& separator = {});

// Replays a certificate move by move, verifying each move's legality; returns
// the final word (empty iff the certificate proves triviality).
std::optional<Word> replay_certificate(const SimplexTable& t,
                                       const RewriteCertificate& cert);

RewriteCertificate reverse_certificate(const SimplexTable& t,
                                       const RewriteCertificate& cert, const Word& a,
                                       const Word& b);

// Fast path used by the net causality scan: certificate for g h ~ h g when
// g, h are causally disjoint loops (one swap), validated by replay.
std::optional<RewriteCertificate> try_swap_certificate(const SimplexTable& t,
                                                       const Word& g, const Word& h);

// Exponent sums over the canonical section. Letters that are self-inverse
// live in Z/2; is_abelian_zero compares those coordinates mod 2.
using AbelianImage = std::map<int, long long>;
AbelianImage abelianize(const SimplexTable& t, const Word& w);
AbelianImage abelian_sub(const SimplexTable& t, const AbelianImage& x,
                         const AbelianImage& y);
bool is_abelian_zero(const SimplexTable& t, const AbelianImage& img);

struct LemmaSample {
  std::vector<CausalCommutator> factors;
  bool productInL = false;
  bool reexpressedInCL = false;
};
struct LemmaReport {
  int samples = 0;
  int inL = 0;
  int reexpressed = 0;
  std::vector<LemmaSample> failures;
};
// Samples products of causal commutators of F(K); every product that lies in
// L(K) must re-express as a product of CL(K) commutators (loop conjugators).
LemmaReport check_lemma_CL(const SimplexTable& t, std::uint64_t seed, int samples,
                           std::size_t maxConjLen, const EqualityBudget& budget = {});

struct MorphismSquareReport {
  int checked = 0;
  int transported = 0;  // certificates that replay in the target
  bool allTransported() const { return checked == transported; }
};
// Checks diagram commutativity on samples: source-certified equalities map to
// target-certified equalities, letterwise.
MorphismSquareReport quotient_image_under_morphism(const SimplexTable& src,
                                                   const SimplexTable& dst,
                                                   const PosetMorphism& psi,
                                                   std::uint64_t seed, int samples);

}  // namespace loopnet
