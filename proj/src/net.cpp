#include "loopnet/net.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace loopnet {

Fibre fibre_generators(const SimplexTable& t, int o, int lengthCap) {
  Fibre f;
  f.base = o;
  f.lengthCap = lengthCap;
  f.generators = enumerate_reduced_loops(t, lengthCap, o);
  return f;
}

bool check_isotony(const SimplexTable& t, int o, int a, int lengthCap) {
  const CausalPoset& p = t.poset();
  if (!p.leq(o, a)) throw Error("NotComparable", "isotony needs o <= a");
  Fibre fo = fibre_generators(t, o, lengthCap);
  for (const Word& w : fo.generators) {
    auto lb = is_loop(t, w);
    if (!lb) return false;
    for (int s : word_support(t, w))
      if (!p.leq(s, a)) return false;
  }
  return true;
}

CausalityEntry check_causality(const SimplexTable& t, int o, int a, int lengthCap,
                               const CommutatorPhase& backend, std::size_t pairCap) {
  const CausalPoset& p = t.poset();
  if (!p.perp(o, a)) throw Error("NotDisjoint", "causality needs o perp a");
  CausalityEntry e;
  e.o = o;
  e.a = a;
  Fibre fo = fibre_generators(t, o, lengthCap);
  Fibre fa = fibre_generators(t, a, lengthCap);
  for (const Word& g : fo.generators) {
    for (const Word& h : fa.generators) {
      if (pairCap && e.pairs >= pairCap) return e;
      ++e.pairs;
      auto cert = try_swap_certificate(t, g, h);
      if (cert) ++e.certified;
      if (backend) e.maxPhase = std::max(e.maxPhase, std::abs(backend(g, h)));
    }
  }
  return e;
}

Word act_on_word(const SimplexTable& t, const SymmetryAction& act, int g, const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (const Generator& letter : w.letters) {
    Simplex1 b = letter_simplex(t, letter);
    Simplex1 image{act.act(g, b.support), act.act(g, b.d0), act.act(g, b.d1)};
    out.letters.push_back(generator_of(t, image));
  }
  return out;
}

bool SymmetryNetReport::allOk() const {
  if (!compositionLaw) return false;
  for (const auto& e : entries)
    if (!e.bijective || !e.inclusionSquare) return false;
  return true;
}

SymmetryNetReport symmetry_on_net(const SimplexTable& t, const SymmetryAction& act,
                                  int lengthCap) {
  const CausalPoset& p = t.poset();
  SymmetryNetReport rep;
  std::vector<Fibre> fibres;
  fibres.reserve(p.size());
  for (int o = 0; o < p.size(); ++o) fibres.push_back(fibre_generators(t, o, lengthCap));

  auto imageSet = [&](int g, const Fibre& f) {
    std::set<Word> out;
    for (const Word& w : f.generators) {
      Word img = reduce(t, act_on_word(t, act, g, w));
      Word inv = inverse(t, img);
      out.insert(std::min(img, inv));
    }
    return out;
  };

  for (int g = 0; g < act.order(); ++g)
    for (int o = 0; o < p.size(); ++o) {
      CovarianceEntry e;
      e.group = g;
      e.o = o;
      int so = act.act(g, o);
      std::set<Word> image = imageSet(g, fibres[o]);
      std::set<Word> target(fibres[so].generators.begin(), fibres[so].generators.end());
      e.bijective = image == target;
      // compatibility with inclusions: the image of an o-generator, read in any
      // a >= o, is the same word read in s(a) >= s(o); letterwise this is the
      // statement that supports transform with the action
      e.inclusionSquare = true;
      for (const Word& w : fibres[o].generators) {
        Word img = act_on_word(t, act, g, w);
        for (int a = 0; a < p.size(); ++a) {
          if (!p.leq(o, a)) continue;
          // j_{ao} then alpha_g lands where alpha_g then j_{s(a) s(o)} lands
          bool below = true;
          for (int si : word_support(t, img)) below = below && p.leq(si, act.act(g, a));
          e.inclusionSquare = e.inclusionSquare && below;
        }
      }
      rep.entries.push_back(e);
    }

  rep.compositionLaw = true;
  std::vector<Word> probes;
  for (int o = 0; o < p.size() && probes.size() < 40; ++o)
    for (const Word& w : fibres[o].generators) {
      probes.push_back(w);
      if (probes.size() >= 40) break;
    }
  for (int g = 0; g < act.order(); ++g)
    for (int h = 0; h < act.order(); ++h) {
      int gh = act.mul(g, h);
      for (const Word& w : probes) {
        Word lhs = act_on_word(t, act, gh, w);
        Word rhs = act_on_word(t, act, g, act_on_word(t, act, h, w));
        rep.compositionLaw = rep.compositionLaw && lhs == rhs;
      }
    }
  return rep;
}

NetReport build_net_report(const SimplexTable& t, const SymmetryAction* act,
                           int lengthCap, const CommutatorPhase& backend,
                           std::size_t pairCap) {
  const CausalPoset& p = t.poset();
  NetReport rep;
  rep.isotonyOk = true;
  for (int o = 0; o < p.size(); ++o)
    for (int a = 0; a < p.size(); ++a)
      if (o != a && p.leq(o, a)) {
        rep.isotonyChecked.emplace_back(o, a);
        rep.isotonyOk = rep.isotonyOk && check_isotony(t, o, a, lengthCap);
      }
  for (int o = 0; o < p.size(); ++o)
    for (int a = o + 1; a < p.size(); ++a)
      if (p.perp(o, a))
        rep.causality.push_back(check_causality(t, o, a, lengthCap, backend, pairCap));
  if (act) rep.covariance = symmetry_on_net(t, *act, lengthCap);
  return rep;
}

}  // namespace loopnet
