#include "loopnet/causet.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace loopnet {

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(text));
    long long num = std::stoll(text.substr(0, slash));
    long long den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw Error("BadRational", "zero denominator: " + text);
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    throw Error("BadRational", "cannot parse rational: " + text);
  } catch (const std::out_of_range&) {
    throw Error("BadRational", "rational out of range: " + text);
  }
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

std::uint64_t fnv1a64(const void* data, std::size_t n) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= bytes[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = fnv1a64(bytes.data(), bytes.size());
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

bool cone_leq(const DoubleConeQ& a, const DoubleConeQ& b) {
  // |c_a - c_b| + |t_a - t_b| + R_a <= R_b, compared with squares to stay exact.
  Rat q = b.radius - a.radius - rat_abs(a.center.t - b.center.t);
  if (q < 0) return false;
  return (a.center - b.center).space_norm_sq() <= q * q;
}

bool cone_perp(const DoubleConeQ& a, const DoubleConeQ& b) {
  Rat s = rat_abs(a.center.t - b.center.t) + a.radius + b.radius;
  return (a.center - b.center).space_norm_sq() >= s * s;
}

bool arc_leq(const ArcQ& a, const ArcQ& b) {
  int off = ((a.start - b.start) % b.n + b.n) % b.n;
  return off + a.length <= b.length;
}

bool arc_perp(const ArcQ& a, const ArcQ& b) {
  // closures [start, start+length] must not meet
  int dab = ((a.start - b.start) % a.n + a.n) % a.n;
  int dba = ((b.start - a.start) % a.n + a.n) % a.n;
  bool meet = dab <= b.length || dba <= a.length;
  return !meet;
}

bool point_precedes(const Vec4Q& e, const Vec4Q& f) {
  Rat dt = f.t - e.t;
  if (dt < 0) return false;
  return (f - e).space_norm_sq() <= dt * dt;
}

int CausalPoset::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return -1;
}

std::vector<int> CausalPoset::lower_set(int o) const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a)
    if (leq(a, o)) out.push_back(a);
  return out;
}

bool CausalPoset::is_maximal(int e) const {
  for (int x = 0; x < size(); ++x)
    if (x != e && leq(e, x)) return false;
  return true;
}

bool CausalPoset::is_minimal(int e) const {
  for (int x = 0; x < size(); ++x)
    if (x != e && leq(x, e)) return false;
  return true;
}

CausalPoset CausalPoset::from_matrices(std::vector<std::string> labels,
                                       std::vector<std::vector<std::uint8_t>> leq,
                                       std::vector<std::vector<std::uint8_t>> perp,
                                       std::vector<RegionGeometry> geometry) {
  CausalPoset p;
  p.labels_ = std::move(labels);
  p.leq_ = std::move(leq);
  p.perp_ = std::move(perp);
  p.geometry_ = std::move(geometry);
  return p;
}

CausalPoset CausalPoset::from_relations(std::vector<std::string> labels,
                                        const std::vector<std::pair<int, int>>& leqPairs,
                                        const std::vector<std::pair<int, int>>& perpPairs,
                                        std::vector<RegionGeometry> geometry) {
  int n = static_cast<int>(labels.size());
  std::vector<std::vector<std::uint8_t>> leq(n, std::vector<std::uint8_t>(n, 0));
  std::vector<std::vector<std::uint8_t>> perp(n, std::vector<std::uint8_t>(n, 0));
  for (int i = 0; i < n; ++i) leq[i][i] = 1;
  for (auto [a, b] : leqPairs) leq[a][b] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i][k])
        for (int j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = 1;
  for (auto [a, b] : perpPairs) perp[a][b] = perp[b][a] = 1;
  // downward stabilization: x <= a, a perp b, y <= b  =>  x perp y
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (perp[a][b])
          for (int x = 0; x < n; ++x)
            if (leq[x][a] && !perp[x][b]) {
              perp[x][b] = perp[b][x] = 1;
              changed = true;
            }
  }
  return from_matrices(std::move(labels), std::move(leq), std::move(perp),
                       std::move(geometry));
}

std::string CausalPoset::canonical_adjacency() const {
  std::ostringstream os;
  os << "elements " << size() << "\n";
  for (int i = 0; i < size(); ++i) os << i << " " << labels_[i] << "\n";
  os << "leq\n";
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (i != j && leq(i, j)) os << i << " " << j << "\n";
  os << "perp\n";
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (perp(i, j)) os << i << " " << j << "\n";
  return os.str();
}

bool is_pathwise_connected(const CausalPoset& p) {
  int n = p.size();
  if (n == 0) return false;
  // edge {a,a'} when a common majorant exists
  std::vector<int> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    for (int b = 0; b < n; ++b) {
      if (seen[b]) continue;
      bool joined = false;
      for (int o = 0; o < n && !joined; ++o) joined = p.leq(a, o) && p.leq(b, o);
      if (joined) {
        seen[b] = 1;
        ++count;
        q.push(b);
      }
    }
  }
  return count == n;
}

ValidationReport validate_poset(const CausalPoset& p) {
  ValidationReport rep;
  int n = p.size();
  auto add = [&rep](std::string axiom, std::vector<int> elems) {
    rep.violations.push_back({std::move(axiom), std::move(elems)});
  };
  for (int a = 0; a < n; ++a)
    if (!p.leq(a, a)) add("reflexive", {a});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && p.leq(a, b) && p.leq(b, a)) add("antisymmetric", {a, b});
      for (int c = 0; c < n; ++c)
        if (p.leq(a, b) && p.leq(b, c) && !p.leq(a, c)) add("transitive", {a, b, c});
    }
  for (int a = 0; a < n; ++a)
    if (p.perp(a, a)) add("perp-irreflexive", {a});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.perp(a, b) != p.perp(b, a)) add("perp-symmetric", {a, b});
  for (int o = 0; o < n; ++o)
    for (int a = 0; a < n; ++a)
      if (p.perp(o, a))
        for (int x = 0; x < n; ++x)
          if (p.leq(x, o) && !p.perp(x, a)) add("perp-stability", {x, a});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.perp(a, b))
        for (int x = 0; x < n; ++x)
          if (p.leq(x, a) && p.leq(x, b)) add("common-minorant", {x, a, b});

  rep.pathwiseConnected = is_pathwise_connected(p);
  if (!rep.pathwiseConnected) add("pathwise-connected", {});

  auto& reg = rep.regularity;
  reg.properSubelement = reg.properSuperelement = reg.perpComplement = true;
  reg.perpExtension = true;
  for (int o = 0; o < n; ++o) {
    bool sub = false, sup = false, comp = false;
    for (int a = 0; a < n; ++a) {
      sub = sub || p.lt(a, o);
      sup = sup || p.lt(o, a);
      comp = comp || p.perp(a, o);
    }
    reg.properSubelement = reg.properSubelement && sub;
    reg.properSuperelement = reg.properSuperelement && sup;
    reg.perpComplement = reg.perpComplement && comp;
  }
  for (int a = 0; a < n; ++a)
    for (int o = 0; o < n; ++o)
      if (p.perp(a, o)) {
        bool ext = false;
        for (int x = 0; x < n; ++x)
          if (x != a && p.leq(a, x) && p.perp(x, o)) ext = true;
        reg.perpExtension = reg.perpExtension && ext;
      }
  return rep;
}

CausalPoset build_minkowski_lattice(const std::vector<DoubleConeSpec>& cones) {
  if (cones.empty()) throw Error("EmptyPoset", "minkowski lattice needs at least one cone");
  int n = static_cast<int>(cones.size());
  std::vector<std::string> labels(n);
  std::vector<RegionGeometry> geom(n);
  std::vector<DoubleConeQ> regions(n);
  for (int i = 0; i < n; ++i) {
    if (cones[i].radius <= 0) throw Error("BadRadius", "radius must be positive");
    regions[i] = DoubleConeQ{cones[i].center, cones[i].radius};
    geom[i] = regions[i];
    labels[i] = cones[i].label.empty() ? ("cone" + std::to_string(i)) : cones[i].label;
  }
  std::vector<std::vector<std::uint8_t>> leq(n, std::vector<std::uint8_t>(n, 0));
  std::vector<std::vector<std::uint8_t>> perp(n, std::vector<std::uint8_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      leq[i][j] = cone_leq(regions[i], regions[j]) ? 1 : 0;
      if (i != j) perp[i][j] = cone_perp(regions[i], regions[j]) ? 1 : 0;
    }
  for (int i = 0; i < n; ++i) leq[i][i] = 1;  // degenerate duplicate guard
  return CausalPoset::from_matrices(std::move(labels), std::move(leq), std::move(perp),
                                    std::move(geom));
}

CausalPoset build_circle(int n, int minLength, int maxLength) {
  if (n < 4) throw Error("BadCircle", "need n >= 4");
  if (minLength < 1 || maxLength >= n || minLength > maxLength)
    throw Error("BadCircle", "lengths must lie in (0, n)");
  std::vector<std::string> labels;
  std::vector<RegionGeometry> geom;
  std::vector<ArcQ> arcs;
  for (int len = minLength; len <= maxLength; ++len)
    for (int s = 0; s < n; ++s) {
      arcs.push_back(ArcQ{n, s, len});
      labels.push_back("A" + std::to_string(s) + "l" + std::to_string(len));
      geom.push_back(arcs.back());
    }
  int m = static_cast<int>(arcs.size());
  std::vector<std::vector<std::uint8_t>> leq(m, std::vector<std::uint8_t>(m, 0));
  std::vector<std::vector<std::uint8_t>> perp(m, std::vector<std::uint8_t>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      leq[i][j] = arc_leq(arcs[i], arcs[j]) ? 1 : 0;
      if (i != j) perp[i][j] = arc_perp(arcs[i], arcs[j]) ? 1 : 0;
    }
  return CausalPoset::from_matrices(std::move(labels), std::move(leq), std::move(perp),
                                    std::move(geom));
}

std::vector<Vec4Q> sprinkle_points(int count, std::uint64_t seed, long long boxExtent) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> coord(0, boxExtent);
  std::set<std::array<long long, 4>> used;
  std::vector<Vec4Q> pts;
  while (static_cast<int>(pts.size()) < count) {
    std::array<long long, 4> c{coord(rng), coord(rng), coord(rng), coord(rng)};
    if (!used.insert(c).second) continue;
    pts.push_back(Vec4Q{Rat(c[0]), Rat(c[1]), Rat(c[2]), Rat(c[3])});
  }
  return pts;
}

CausalPoset build_causal_set_poset(const CausalSetSpec& spec, std::size_t elementCap) {
  int np = static_cast<int>(spec.points.size());
  if (np == 0) throw Error("EmptyPoset", "causal set needs points");
  for (int i = 0; i < np; ++i)
    for (int j = i + 1; j < np; ++j)
      if (spec.points[i] == spec.points[j])
        throw Error("DuplicatePoints", "causal set points must be pairwise distinct");
  if (spec.maxSubsetSize < 1) throw Error("BadSubsetSize", "maxSubsetSize must be positive");

  // enumerate nonempty subsets of size <= maxSubsetSize
  std::vector<std::vector<int>> subsets;
  std::vector<int> current;
  auto rec = [&](auto&& self, int from) -> void {
    if (!current.empty()) subsets.push_back(current);
    if (static_cast<int>(current.size()) == spec.maxSubsetSize) return;
    for (int i = from; i < np; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  if (subsets.size() > elementCap)
    throw Error("PosetTooLarge", "causal set poset would have " +
                                     std::to_string(subsets.size()) + " elements");

  // comparability of sprinkled points under the forward-cone order
  std::vector<std::vector<std::uint8_t>> related(np, std::vector<std::uint8_t>(np, 0));
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j)
      related[i][j] = (point_precedes(spec.points[i], spec.points[j]) ||
                       point_precedes(spec.points[j], spec.points[i]))
                          ? 1
                          : 0;

  int m = static_cast<int>(subsets.size());
  std::vector<std::string> labels(m);
  std::vector<RegionGeometry> geom(m);
  std::vector<std::vector<std::uint8_t>> leq(m, std::vector<std::uint8_t>(m, 0));
  std::vector<std::vector<std::uint8_t>> perp(m, std::vector<std::uint8_t>(m, 0));
  for (int i = 0; i < m; ++i) {
    std::ostringstream os;
    os << "S{";
    for (std::size_t k = 0; k < subsets[i].size(); ++k)
      os << (k ? "," : "") << subsets[i][k];
    os << "}";
    labels[i] = os.str();
    PointSetQ ps;
    for (int idx : subsets[i]) ps.points.push_back(spec.points[idx]);
    geom[i] = ps;
  }
  auto subset_of = [&](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      leq[i][j] = subset_of(subsets[i], subsets[j]) ? 1 : 0;
      if (i != j) {
        bool anyRelated = false;
        for (int a : subsets[i])
          for (int b : subsets[j])
            anyRelated = anyRelated || related[a][b];
        perp[i][j] = anyRelated ? 0 : 1;
      }
    }
  return CausalPoset::from_matrices(std::move(labels), std::move(leq), std::move(perp),
                                    std::move(geom));
}

std::vector<std::string> PosetMorphism::violations() const {
  std::vector<std::string> out;
  const auto& s = *source;
  const auto& t = *target;
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) {
      if (a != b && map[a] == map[b]) out.push_back("not injective");
      if (s.leq(a, b) && !t.leq(map[a], map[b])) out.push_back("order not preserved");
      if (s.perp(a, b) != t.perp(map[a], map[b])) out.push_back("perp not matched");
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RestrictedPoset restrict_poset(const CausalPoset& p, int o) {
  if (o < 0 || o >= p.size()) throw Error("UnknownElement", "restrict: element out of range");
  RestrictedPoset out;
  out.toAmbient = p.lower_set(o);
  int m = static_cast<int>(out.toAmbient.size());
  std::vector<std::string> labels(m);
  std::vector<RegionGeometry> geom;
  if (p.has_geometry()) geom.resize(m);
  std::vector<std::vector<std::uint8_t>> leq(m, std::vector<std::uint8_t>(m, 0));
  std::vector<std::vector<std::uint8_t>> perp(m, std::vector<std::uint8_t>(m, 0));
  for (int i = 0; i < m; ++i) {
    labels[i] = p.label(out.toAmbient[i]);
    if (p.has_geometry()) geom[i] = p.geometry(out.toAmbient[i]);
    for (int j = 0; j < m; ++j) {
      leq[i][j] = p.leq(out.toAmbient[i], out.toAmbient[j]) ? 1 : 0;
      perp[i][j] = p.perp(out.toAmbient[i], out.toAmbient[j]) ? 1 : 0;
    }
  }
  out.poset = CausalPoset::from_matrices(std::move(labels), std::move(leq), std::move(perp),
                                         std::move(geom));
  return out;
}

PosetMorphism RestrictedPoset::inclusion(const CausalPoset& ambient) const {
  return PosetMorphism{&poset, &ambient, toAmbient};
}

SymmetryAction SymmetryAction::trivial(const CausalPoset& p) {
  std::vector<int> id(p.size());
  std::iota(id.begin(), id.end(), 0);
  SymmetryAction a;
  a.names_ = {"e"};
  a.perms_ = {id};
  a.mult_ = {{0}};
  a.inverse_ = {0};
  a.geoms_ = {GeomMap{}};
  return a;
}

namespace {
GeomMap compose_geom(const GeomMap& g, const GeomMap& h) {
  // g after h; only compositions arising in the fixtures are supported
  if (std::holds_alternative<std::monostate>(h)) return g;
  if (std::holds_alternative<std::monostate>(g)) return h;
  if (auto* tg = std::get_if<GeomTranslation>(&g)) {
    if (auto* th = std::get_if<GeomTranslation>(&h)) {
      Vec4Q sum = tg->offset + th->offset;
      if (sum == Vec4Q{}) return GeomMap{};
      return GeomTranslation{sum};
    }
  }
  if (auto* rg = std::get_if<GeomRotationTurns>(&g)) {
    if (auto* rh = std::get_if<GeomRotationTurns>(&h)) {
      Rat turns = rg->turns + rh->turns;
      // normalize into [0,1)
      long long whole = turns.numerator() / turns.denominator();
      turns -= Rat(whole);
      if (turns < 0) turns += Rat(1);
      if (turns.numerator() == 0) return GeomMap{};
      return GeomRotationTurns{turns};
    }
  }
  if (std::holds_alternative<GeomReflectionX>(g) && std::holds_alternative<GeomReflectionX>(h))
    return GeomMap{};  // reflection squared
  throw Error("GeomCompose", "unsupported geometric composition");
}

bool geom_equal(const GeomMap& a, const GeomMap& b) {
  if (a.index() != b.index()) return false;
  if (auto* ta = std::get_if<GeomTranslation>(&a))
    return ta->offset == std::get<GeomTranslation>(b).offset;
  if (auto* ra = std::get_if<GeomRotationTurns>(&a))
    return ra->turns == std::get<GeomRotationTurns>(b).turns;
  return true;
}
}  // namespace

SymmetryAction SymmetryAction::generate(const CausalPoset& p,
                                        const std::vector<Generator>& gens, int cap) {
  int n = p.size();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);

  SymmetryAction a;
  a.names_.push_back("e");
  a.perms_.push_back(id);
  a.geoms_.push_back(GeomMap{});

  // group elements are identified by permutation plus geometric realization,
  // so unfaithful crafted actions stay distinguishable
  auto find = [&](const std::vector<int>& perm, const GeomMap& geom) {
    for (int i = 0; i < static_cast<int>(a.perms_.size()); ++i)
      if (a.perms_[i] == perm && geom_equal(a.geoms_[i], geom)) return i;
    return -1;
  };
  for (const auto& g : gens) {
    if (static_cast<int>(g.perm.size()) != n)
      throw Error("BadAction", "generator permutation has wrong size");
    if (find(g.perm, g.geom) == -1) {
      a.names_.push_back(g.name);
      a.perms_.push_back(g.perm);
      a.geoms_.push_back(g.geom);
    }
  }
  // close under composition (generators applied on both sides)
  std::queue<int> all;
  for (int i = 0; i < static_cast<int>(a.perms_.size()); ++i) all.push(i);
  while (!all.empty()) {
    int g = all.front();
    all.pop();
    for (int h = 0; h < static_cast<int>(a.perms_.size()); ++h) {
      for (auto [x, y] : {std::pair{g, h}, std::pair{h, g}}) {
        std::vector<int> comp(n);
        for (int e = 0; e < n; ++e) comp[e] = a.perms_[x][a.perms_[y][e]];
        GeomMap geom = compose_geom(a.geoms_[x], a.geoms_[y]);
        if (find(comp, geom) == -1) {
          if (static_cast<int>(a.perms_.size()) >= cap)
            throw Error("PosetTooLarge", "symmetry group closure exceeded cap");
          a.names_.push_back(a.names_[x] + "*" + a.names_[y]);
          a.perms_.push_back(comp);
          a.geoms_.push_back(geom);
          all.push(static_cast<int>(a.perms_.size()) - 1);
        }
      }
    }
  }
  int m = static_cast<int>(a.perms_.size());
  a.mult_.assign(m, std::vector<int>(m, -1));
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h) {
      std::vector<int> comp(n);
      for (int e = 0; e < n; ++e) comp[e] = a.perms_[g][a.perms_[h][e]];
      a.mult_[g][h] = find(comp, compose_geom(a.geoms_[g], a.geoms_[h]));
      if (a.mult_[g][h] == -1) throw Error("BadAction", "closure failure");
    }
  a.inverse_.assign(m, -1);
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      if (a.mult_[g][h] == 0 && a.mult_[h][g] == 0) a.inverse_[g] = h;
  for (int g = 0; g < m; ++g)
    if (a.inverse_[g] < 0) throw Error("BadAction", "element without inverse");
  return a;
}

std::vector<std::string> SymmetryAction::violations(const CausalPoset& p) const {
  std::vector<std::string> out;
  for (int g = 0; g < order(); ++g) {
    std::vector<char> hit(p.size(), 0);
    for (int e = 0; e < p.size(); ++e) hit[act(g, e)] = 1;
    for (int e = 0; e < p.size(); ++e)
      if (!hit[e]) out.push_back("not a permutation: " + names_[g]);
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y) {
        if (p.leq(x, y) != p.leq(act(g, x), act(g, y)))
          out.push_back("order not preserved: " + names_[g]);
        if (p.perp(x, y) != p.perp(act(g, x), act(g, y)))
          out.push_back("perp not preserved: " + names_[g]);
      }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OrbitStabilizer orbit_and_stabilizer(const SymmetryAction& act, int o) {
  OrbitStabilizer out;
  std::set<int> orbit;
  for (int g = 0; g < act.order(); ++g) {
    orbit.insert(act.act(g, o));
    if (act.act(g, o) == o) out.stabilizer.push_back(g);
  }
  out.orbit.assign(orbit.begin(), orbit.end());
  return out;
}

std::optional<int> translate_element(const CausalPoset& p, int e, const Vec4Q& offset) {
  if (!p.has_geometry()) return std::nullopt;
  const auto* cone = std::get_if<DoubleConeQ>(&p.geometry(e));
  if (!cone) return std::nullopt;
  DoubleConeQ moved{cone->center + offset, cone->radius};
  for (int i = 0; i < p.size(); ++i) {
    const auto* c = std::get_if<DoubleConeQ>(&p.geometry(i));
    if (c && c->center == moved.center && c->radius == moved.radius) return i;
  }
  return std::nullopt;
}

}  // namespace loopnet
