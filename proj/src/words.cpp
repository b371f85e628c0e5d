#include "loopnet/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace loopnet {

Word multiply(const Word& w1, const Word& w2) {
  Word out;
  out.letters.reserve(w1.size() + w2.size());
  out.letters.insert(out.letters.end(), w1.letters.begin(), w1.letters.end());
  out.letters.insert(out.letters.end(), w2.letters.begin(), w2.letters.end());
  return out;
}

Word inverse(const SimplexTable& t, const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(letter_inverse(t, *it));
  return out;
}

Word reduce(const SimplexTable& t, const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (const Generator& g : w.letters) {
    if (!out.letters.empty() && out.letters.back() == letter_inverse(t, g))
      out.letters.pop_back();
    else
      out.letters.push_back(g);
  }
  return out;
}

bool is_reduced(const SimplexTable& t, const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w.letters[i + 1] == letter_inverse(t, w.letters[i])) return false;
  return true;
}

std::vector<int> word_support(const SimplexTable& t, const Word& w) {
  Word r = reduce(t, w);
  std::set<int> s;
  for (const Generator& g : r.letters) s.insert(letter_simplex(t, g).support);
  return {s.begin(), s.end()};
}

PathInfo is_path(const SimplexTable& t, const Word& w) {
  PathInfo info;
  if (w.empty()) {
    info.isPath = true;
    info.everywhere = true;
    return info;
  }
  // display order: letters[i] is applied after letters[i+1], so the start of
  // letters[i] must be the end of letters[i+1]
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (letter_simplex(t, w.letters[i]).d1 != letter_simplex(t, w.letters[i + 1]).d0)
      return info;
  info.isPath = true;
  info.start = letter_simplex(t, w.letters.back()).d1;
  info.end = letter_simplex(t, w.letters.front()).d0;
  return info;
}

std::optional<LoopBase> is_loop(const SimplexTable& t, const Word& w) {
  PathInfo info = is_path(t, w);
  if (!info.isPath) return std::nullopt;
  if (info.everywhere) return LoopBase{true, -1};
  if (info.start != info.end) return std::nullopt;
  return LoopBase{false, info.start};
}

std::optional<std::vector<Word>> loop_block_decomposition(const SimplexTable& t,
                                                          const Word& w) {
  Word r = reduce(t, w);
  std::size_t n = r.size();
  if (n == 0) return std::vector<Word>{};
  // reach[i]: suffix r[i..n) (in display order) splits into consecutive loops.
  // Blocks are contiguous in display order, scanning from the right (the
  // first-applied end).
  std::vector<int> reach(n + 1, 0);
  std::vector<std::size_t> split(n + 1, 0);
  reach[n] = 1;
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (!reach[j]) continue;
      Word block;
      block.letters.assign(r.letters.begin() + i, r.letters.begin() + j);
      auto lb = is_loop(t, block);
      if (lb && !lb->everywhere) {
        reach[i] = 1;
        split[i] = j;
        break;  // deterministic: shortest suffix step first
      }
    }
  }
  if (!reach[0]) return std::nullopt;
  std::vector<Word> blocks;
  std::size_t i = 0;
  while (i < n) {
    Word block;
    block.letters.assign(r.letters.begin() + i, r.letters.begin() + split[i]);
    blocks.push_back(std::move(block));
    i = split[i];
  }
  return blocks;
}

std::optional<std::pair<int, int>> word_perp(const SimplexTable& t, const Word& w1,
                                             const Word& w2) {
  std::vector<int> s1 = word_support(t, w1);
  std::vector<int> s2 = word_support(t, w2);
  std::pair<int, int> witness;
  if (t.has_perp_dominators(s1, s2, &witness)) return witness;
  return std::nullopt;
}

Word apply_morphism(const SimplexTable& src, const SimplexTable& dst,
                    const PosetMorphism& psi, const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (const Generator& g : w.letters) {
    Simplex1 image = morphism_image(psi, letter_simplex(src, g));
    out.letters.push_back(generator_of(dst, image));
  }
  return out;
}

std::vector<Word> enumerate_reduced_loops(const SimplexTable& t, int lengthCap,
                                          std::optional<int> supportBound) {
  const CausalPoset& p = t.poset();
  // usable letters, grouped by starting point d1
  std::vector<std::vector<Generator>> outgoing(p.size());
  for (int c = 0; c < t.tangent_count(); ++c) {
    for (bool opp : {false, true}) {
      if (opp && t.involutive(c)) continue;
      Simplex1 b = t.simplex(c, opp);
      if (supportBound && !p.leq(b.support, *supportBound)) continue;
      outgoing[b.d1].push_back({c, opp});
    }
  }
  for (auto& v : outgoing) std::sort(v.begin(), v.end());

  std::vector<Word> loops;
  // grow words in application order (first letter first), then flip to
  // display order when recording
  std::vector<Generator> appOrder;
  auto dfs = [&](auto&& self, int base, int at, int remaining) -> void {
    for (const Generator& g : outgoing[at]) {
      if (!appOrder.empty() && g == letter_inverse(t, appOrder.back())) continue;
      appOrder.push_back(g);
      int end = letter_simplex(t, g).d0;
      if (end == base) {
        Word w;
        w.letters.assign(appOrder.rbegin(), appOrder.rend());
        loops.push_back(std::move(w));
      }
      if (remaining > 1) self(self, base, end, remaining - 1);
      appOrder.pop_back();
    }
  };
  for (int base = 0; base < p.size(); ++base) dfs(dfs, base, base, lengthCap);

  // inverse pairing: keep min(w, w^-1)
  std::vector<Word> out;
  for (Word& w : loops) {
    Word inv = inverse(t, w);
    if (w <= inv) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Word parse_word(const SimplexTable& t, const std::string& text) {
  const CausalPoset& p = t.poset();
  Word out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    bool opp = false;
    if (!tok.empty() && tok[0] == '~') {
      opp = true;
      tok = tok.substr(1);
    }
    if (tok.size() < 7 || tok.front() != '(' || tok.back() != ')')
      throw Error("BadWord", "expected (support;d0,d1): " + tok);
    std::string body = tok.substr(1, tok.size() - 2);
    auto semi = body.find(';');
    auto comma = body.find(',', semi == std::string::npos ? 0 : semi);
    if (semi == std::string::npos || comma == std::string::npos)
      throw Error("BadWord", "expected (support;d0,d1): " + tok);
    int s = p.index_of(body.substr(0, semi));
    int d0 = p.index_of(body.substr(semi + 1, comma - semi - 1));
    int d1 = p.index_of(body.substr(comma + 1));
    if (s < 0 || d0 < 0 || d1 < 0)
      throw Error("BadWord", "unknown element in token: " + tok);
    Simplex1 b{s, d0, d1};
    if (opp) b = opposite(b);
    if (!in_tangent1(p, b)) throw Error("NotTangent", "token is not tangent: " + tok);
    out.letters.push_back(generator_of(t, b));
  }
  return out;
}

std::string format_word(const SimplexTable& t, const Word& w) {
  const CausalPoset& p = t.poset();
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Simplex1 b = letter_simplex(t, w.letters[i]);
    if (i) os << ' ';
    os << '(' << p.label(b.support) << ';' << p.label(b.d0) << ',' << p.label(b.d1) << ')';
  }
  return os.str();
}

}  // namespace loopnet
