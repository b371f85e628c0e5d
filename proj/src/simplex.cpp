#include "loopnet/simplex.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace loopnet {

SimplexClass classify1(const CausalPoset& p, const Simplex1& b) {
  if (b.d0 == b.d1 && b.d0 == b.support) return SimplexClass::Degenerate;
  if (!p.comparable(b.d0, b.d1)) return SimplexClass::Tangent;
  int top = p.leq(b.d0, b.d1) ? b.d1 : b.d0;
  return top == b.support ? SimplexClass::Nerve : SimplexClass::Tangent;
}

std::vector<Classified1> enumerate_1simplices(const CausalPoset& p) {
  std::vector<Classified1> out;
  for (int s = 0; s < p.size(); ++s) {
    auto lower = p.lower_set(s);
    for (int a : lower)
      for (int b : lower) out.push_back({{s, a, b}, classify1(p, {s, a, b})});
  }
  std::sort(out.begin(), out.end(),
            [](const Classified1& l, const Classified1& r) { return l.simplex < r.simplex; });
  return out;
}

std::optional<Simplex2> make_simplex2(const CausalPoset& p, int support, Simplex1 f0,
                                      Simplex1 f1, Simplex1 f2) {
  for (const auto& f : {f0, f1, f2}) {
    if (!p.leq(f.support, support)) return std::nullopt;
    if (!p.leq(f.d0, f.support) || !p.leq(f.d1, f.support)) return std::nullopt;
  }
  if (f0.d0 != f1.d0 || f0.d1 != f2.d0 || f1.d1 != f2.d1) return std::nullopt;
  return Simplex2{support, f0, f1, f2};
}

bool in_nerve2(const CausalPoset& p, const Simplex2& c) {
  if (!in_nerve1(p, c.f0) || !in_nerve1(p, c.f1) || !in_nerve1(p, c.f2)) return false;
  // support must equal the greatest vertex; nerve faces force comparability
  int g = c.v0();
  for (int v : {c.v1(), c.v2()}) {
    if (!p.comparable(g, v)) return false;
    if (p.leq(g, v)) g = v;
  }
  return g == c.support;
}

Enum2Result enumerate_2simplices(const CausalPoset& p, std::size_t cap) {
  Enum2Result out;
  for (int s = 0; s < p.size(); ++s) {
    auto lower = p.lower_set(s);
    auto supportsOf = [&](int a, int b) {
      std::vector<int> su;
      for (int t : lower)
        if (p.leq(a, t) && p.leq(b, t)) su.push_back(t);
      return su;
    };
    for (int v0 : lower)
      for (int v1 : lower)
        for (int v2 : lower) {
          for (int s0 : supportsOf(v0, v1))
            for (int s1 : supportsOf(v0, v2))
              for (int s2 : supportsOf(v1, v2)) {
                Simplex2 c{s, {s0, v0, v1}, {s1, v0, v2}, {s2, v1, v2}};
                if (out.simplices.size() >= cap) {
                  out.truncated = true;
                  return out;
                }
                out.simplices.emplace_back(c, in_nerve2(p, c));
              }
        }
  }
  return out;
}

Simplex1 morphism_image(const PosetMorphism& psi, const Simplex1& b) {
  return {psi.apply(b.support), psi.apply(b.d0), psi.apply(b.d1)};
}

SimplexTable::SimplexTable(const CausalPoset& p) : poset_(&p) {
  for (const auto& [s, cls] : enumerate_1simplices(p)) {
    if (cls != SimplexClass::Tangent) continue;
    // canonical representative of {b, opposite(b)}: the lexicographically
    // smaller one (the fixed section of T1 modulo opposite)
    Simplex1 o = opposite(s);
    if (s <= o) canon_.push_back(s);
  }
  std::sort(canon_.begin(), canon_.end());

  int n = p.size();
  words_ = static_cast<std::size_t>((n + 63) / 64);
  upMask_.assign(n, std::vector<std::uint64_t>(words_, 0));
  perpMask_.assign(n, std::vector<std::uint64_t>(words_, 0));
  for (int e = 0; e < n; ++e)
    for (int o = 0; o < n; ++o) {
      if (p.leq(e, o)) upMask_[e][o / 64] |= 1ull << (o % 64);
      if (p.perp(e, o)) perpMask_[e][o / 64] |= 1ull << (o % 64);
    }
}

std::optional<std::pair<int, bool>> SimplexTable::lookup(const Simplex1& b) const {
  auto find = [this](const Simplex1& s) -> int {
    auto it = std::lower_bound(canon_.begin(), canon_.end(), s);
    if (it != canon_.end() && *it == s) return static_cast<int>(it - canon_.begin());
    return -1;
  };
  int i = find(b);
  if (i >= 0) return std::pair{i, false};
  i = find(opposite(b));
  if (i >= 0) return std::pair{i, true};
  return std::nullopt;
}

bool SimplexTable::has_perp_dominators(const std::vector<int>& supportA,
                                       const std::vector<int>& supportB,
                                       std::pair<int, int>* witness) const {
  int n = poset_->size();
  std::vector<std::uint64_t> domA(words_, ~0ull), domB(words_, ~0ull);
  if (n % 64) {
    domA[words_ - 1] = domB[words_ - 1] = (1ull << (n % 64)) - 1;
  }
  for (int e : supportA)
    for (std::size_t w = 0; w < words_; ++w) domA[w] &= upMask_[e][w];
  for (int e : supportB)
    for (std::size_t w = 0; w < words_; ++w) domB[w] &= upMask_[e][w];
  for (int o1 = 0; o1 < n; ++o1) {
    if (!(domA[o1 / 64] >> (o1 % 64) & 1)) continue;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t hit = domB[w] & perpMask_[o1][w];
      if (hit) {
        if (witness) {
          int o2 = static_cast<int>(w * 64 + std::countr_zero(hit));
          *witness = {o1, o2};
        }
        return true;
      }
    }
  }
  return false;
}

}  // namespace loopnet
