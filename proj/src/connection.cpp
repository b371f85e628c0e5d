#include "loopnet/connection.hpp"

#include <algorithm>
#include <memory>
#include <queue>
#include <set>

namespace loopnet {

namespace {
double op_norm(const MatrixU& m) {
  Eigen::JacobiSVD<MatrixU> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}
}  // namespace

UnitaryValue UnitaryContext::mul(const UnitaryValue& a, const UnitaryValue& b) const {
  if (a.weyl && b.weyl) {
    if (!prof_) throw Error("NoProfile", "Weyl values need a hyperboloid profile");
    return UnitaryValue::of(weyl_multiply(*prof_, *a.weyl, *b.weyl));
  }
  if (a.mat && b.mat) return UnitaryValue::of(MatrixU(*a.mat * *b.mat));
  throw Error("BackendMismatch", "cannot multiply values from different backends");
}

UnitaryValue UnitaryContext::inv(const UnitaryValue& a) const {
  if (a.weyl) return UnitaryValue::of(weyl_inverse(*a.weyl));
  return UnitaryValue::of(MatrixU(a.mat->adjoint()));
}

UnitaryValue UnitaryContext::identity_like(const UnitaryValue& a) const {
  if (a.weyl) return UnitaryValue::of(WeylElement::identity());
  return UnitaryValue::of(MatrixU(MatrixU::Identity(a.mat->rows(), a.mat->cols())));
}

bool UnitaryContext::eq(const UnitaryValue& a, const UnitaryValue& b) const {
  return deviation(a, b) <= (a.weyl ? weylPhaseTol_ : matTol_);
}

double UnitaryContext::deviation(const UnitaryValue& a, const UnitaryValue& b) const {
  if (a.weyl && b.weyl) {
    double dphi = std::abs(wrap_phase(a.weyl->phase - b.weyl->phase));
    if (a.weyl->func == b.weyl->func) return dphi;
    if (!prof_) return 1.0;
    TestFunction diff = a.weyl->func - b.weyl->func;
    return dphi + std::sqrt(std::max(0.0, prof_->inner(diff, diff).real()));
  }
  if (a.mat && b.mat) return op_norm(*a.mat - *b.mat);
  throw Error("BackendMismatch", "cannot compare values from different backends");
}

bool UnitaryContext::is_unitary(const UnitaryValue& a) const {
  if (a.weyl) return true;  // phase/function pairs model unitaries exactly
  MatrixU m = *a.mat;
  return op_norm(MatrixU(m.adjoint() * m - MatrixU::Identity(m.rows(), m.cols()))) < 1e-10;
}

PathFrame build_path_frame(const SimplexTable& t, int pole) {
  const CausalPoset& p = t.poset();
  if (p.is_maximal(pole) && p.size() > 1)
    throw Error("NotConnected", "a maximal pole has no outgoing tangent letters");
  PathFrame frame;
  frame.pole = pole;
  frame.paths[pole] = Word{};
  // BFS over tangent letters, breadth = word length; outgoing letters sorted
  // for determinism
  std::vector<std::vector<Generator>> outgoing(p.size());
  for (int c = 0; c < t.tangent_count(); ++c)
    for (bool opp : {false, true}) {
      if (opp && t.involutive(c)) continue;
      Simplex1 b = t.simplex(c, opp);
      outgoing[b.d1].push_back({c, opp});
    }
  for (auto& v : outgoing) std::sort(v.begin(), v.end());

  std::queue<int> work;
  work.push(pole);
  while (!work.empty()) {
    int at = work.front();
    work.pop();
    for (const Generator& g : outgoing[at]) {
      int next = letter_simplex(t, g).d0;
      if (frame.paths.contains(next)) continue;
      Word step;
      step.letters.push_back(g);
      frame.paths[next] = multiply(step, frame.paths[at]);
      work.push(next);
    }
  }
  for (int a = 0; a < p.size(); ++a)
    if (!p.is_maximal(a) && !frame.paths.contains(a))
      throw Error("NotConnected", "no tangent path from pole to " + p.label(a));
  return frame;
}

LoopRep make_weyl_rep(const FieldConnection& conn) {
  LoopRep rep;
  rep.ctx = UnitaryContext(&conn.profile());
  rep.eval = [&conn](const Word& w) { return UnitaryValue::of(conn.holonomy(w)); };
  return rep;
}

LoopRep make_matrix_rep(const SimplexTable& t, std::map<int, MatrixU> perCanon,
                        double matTol) {
  auto table = std::make_shared<std::map<int, MatrixU>>(std::move(perCanon));
  LoopRep rep;
  rep.ctx = UnitaryContext(nullptr, matTol);
  rep.eval = [table, &t](const Word& w) {
    if (w.empty()) {
      if (table->empty()) throw Error("NoAssignment", "empty matrix assignment");
      const MatrixU& any = table->begin()->second;
      return UnitaryValue::of(MatrixU(MatrixU::Identity(any.rows(), any.cols())));
    }
    MatrixU acc;
    bool first = true;
    for (const Generator& g : w.letters) {
      auto it = table->find(g.canon);
      if (it == table->end()) throw Error("NoAssignment", "letter without a matrix");
      MatrixU m = g.opp ? MatrixU(it->second.adjoint()) : it->second;
      acc = first ? m : MatrixU(acc * m);
      first = false;
    }
    return UnitaryValue::of(acc);
  };
  return rep;
}

SymmetryAd matrix_ad(const SymmetryAction& act, std::map<int, MatrixU> gamma) {
  auto g = std::make_shared<std::map<int, MatrixU>>(std::move(gamma));
  (void)act;
  return [g](int s, const UnitaryValue& v) {
    const MatrixU& G = g->at(s);
    return UnitaryValue::of(MatrixU(G * *v.mat * G.adjoint()));
  };
}

SymmetryAd weyl_ad(const SymmetryAction& act) {
  return [&act](int s, const UnitaryValue& v) {
    WeylElement out = *v.weyl;
    out.func = transport(out.func, act.geom(s));
    return UnitaryValue::of(out);
  };
}

const UnitaryValue& Connection1Cochain::at(const Simplex1& b) const {
  auto it = values.find(b);
  if (it == values.end()) throw Error("NoValue", "connection has no value on simplex");
  return it->second;
}

Connection1Cochain connection_from_rep(const SimplexTable& t, const LoopRep& rep,
                                       const PathFrame& frame) {
  Connection1Cochain u;
  for (int c = 0; c < t.tangent_count(); ++c)
    for (bool opp : {false, true}) {
      if (opp && t.involutive(c)) continue;
      Simplex1 b = t.simplex(c, opp);
      auto itEnd = frame.paths.find(b.d0);
      auto itStart = frame.paths.find(b.d1);
      if (itEnd == frame.paths.end() || itStart == frame.paths.end())
        throw Error("NotConnected", "frame misses a face of a tangent simplex");
      Word letter;
      letter.letters.push_back({c, t.involutive(c) ? false : opp});
      // the loop at the pole runs out along the frame path to d1 b, through b,
      // and back against the frame path to d0 b (rightmost letters act first)
      Word word = multiply(multiply(inverse(t, itEnd->second), letter), itStart->second);
      u.values[b] = rep.eval(word);
    }
  return u;
}

UnitaryValue connection_holonomy(const SimplexTable& t, const UnitaryContext& ctx,
                                 const Connection1Cochain& u, const Word& w) {
  if (u.values.empty()) throw Error("NoValue", "empty connection");
  UnitaryValue acc = ctx.identity_like(u.values.begin()->second);
  for (const Generator& g : w.letters) acc = ctx.mul(acc, u.at(letter_simplex(t, g)));
  return acc;
}

ConnectionSystem build_connection_system(const SimplexTable& t, const LoopRep& rep,
                                         const PathFrameSystem& frames) {
  ConnectionSystem sys;
  for (const auto& [o, frame] : frames.frames)
    sys.perBase[o] = connection_from_rep(t, rep, frame);
  return sys;
}

ConnectionSystem constant_system(const SimplexTable& t, const Connection1Cochain& u) {
  ConnectionSystem sys;
  for (int o = 0; o < t.poset().size(); ++o)
    if (!t.poset().is_maximal(o) || t.poset().size() == 1) sys.perBase[o] = u;
  return sys;
}

SystemCheckReport check_system(const SimplexTable& t, const ConnectionSystem& sys,
                               const UnitaryContext& ctx, const LoopRep* rep,
                               const SymmetryAction* act, const SymmetryAd* ad,
                               int loopCap, std::size_t pairCap) {
  const CausalPoset& p = t.poset();
  SystemCheckReport rep_;
  auto note = [&](std::string check, double dev, std::string detail) {
    rep_.entries.push_back({std::move(check), dev, std::move(detail)});
    rep_.maxDeviation = std::max(rep_.maxDeviation, dev);
  };

  // loops at each available base, capped
  std::map<int, std::vector<Word>> loopsAt;
  for (const auto& [o, u] : sys.perBase) {
    std::vector<Word> all = enumerate_reduced_loops(t, loopCap, std::nullopt);
    std::vector<Word> mine;
    for (const Word& w : all) {
      auto lb = is_loop(t, w);
      if (lb && !lb->everywhere && lb->base == o) mine.push_back(w);
    }
    loopsAt[o] = std::move(mine);
  }

  // (1) causality across bases
  std::size_t pairs = 0;
  for (const auto& [o, uo] : sys.perBase) {
    for (const auto& [a, ua] : sys.perBase) {
      if (a <= o) continue;
      for (const Word& pw : loopsAt[o]) {
        for (const Word& qw : loopsAt[a]) {
          if (pairs >= pairCap) break;
          if (!word_perp(t, pw, qw)) continue;
          ++pairs;
          UnitaryValue up = connection_holonomy(t, ctx, uo, pw);
          UnitaryValue uq = connection_holonomy(t, ctx, ua, qw);
          double dev = ctx.deviation(ctx.mul(up, uq), ctx.mul(uq, up));
          note("causality", dev, p.label(o) + "|" + p.label(a));
        }
      }
    }
  }

  // (2) covariance through the Ad realization
  if (act && ad) {
    for (const auto& [o, uo] : sys.perBase)
      for (int g = 0; g < act->order(); ++g) {
        int so = act->act(g, o);
        auto itTarget = sys.perBase.find(so);
        if (itTarget == sys.perBase.end()) continue;
        for (const auto& [b, v] : uo.values) {
          Simplex1 gb{act->act(g, b.support), act->act(g, b.d0), act->act(g, b.d1)};
          double dev = ctx.deviation((*ad)(g, v), itTarget->second.at(gb));
          note("covariance", dev, act->name(g) + "@" + p.label(o));
        }
      }
  }

  // (3) base-point recovery w(p) = u_{P_o}(p)
  if (rep) {
    std::size_t done = 0;
    for (const auto& [o, uo] : sys.perBase)
      for (const Word& pw : loopsAt[o]) {
        if (done >= pairCap) break;
        ++done;
        double dev =
            ctx.deviation(connection_holonomy(t, ctx, uo, pw), rep->eval(pw));
        note("recovery", dev, p.label(o));
      }
  }
  return rep_;
}

std::optional<Word> check_obstruction(const SimplexTable& t, const SymmetryAction& act,
                                      int o, int a, int searchLen) {
  const CausalPoset& p = t.poset();
  // letters fixed pointwise by the joint stabilizer
  std::vector<int> joint;
  for (int g = 0; g < act.order(); ++g)
    if (act.act(g, o) == o && act.act(g, a) == a) joint.push_back(g);
  auto fixed = [&](const Simplex1& b) {
    for (int g : joint) {
      if (act.act(g, b.support) != b.support || act.act(g, b.d0) != b.d0 ||
          act.act(g, b.d1) != b.d1)
        return false;
    }
    return true;
  };
  std::vector<std::vector<Generator>> outgoing(p.size());
  for (int c = 0; c < t.tangent_count(); ++c)
    for (bool opp : {false, true}) {
      if (opp && t.involutive(c)) continue;
      Simplex1 b = t.simplex(c, opp);
      if (!fixed(b)) continue;
      outgoing[b.d1].push_back({c, opp});
    }
  for (auto& v : outgoing) std::sort(v.begin(), v.end());
  // BFS from o to a
  std::map<int, Word> reached;
  reached[o] = Word{};
  std::queue<int> work;
  work.push(o);
  while (!work.empty()) {
    int at = work.front();
    work.pop();
    if (static_cast<int>(reached[at].size()) >= searchLen) continue;
    for (const Generator& g : outgoing[at]) {
      int next = letter_simplex(t, g).d0;
      if (reached.contains(next)) continue;
      Word step;
      step.letters.push_back(g);
      reached[next] = multiply(step, reached[at]);
      work.push(next);
    }
  }
  auto it = reached.find(a);
  if (it == reached.end()) return std::nullopt;
  return it->second;
}

PathFrameSystem build_covariant_system(const SimplexTable& t, const SymmetryAction& act,
                                       int searchLen) {
  const CausalPoset& p = t.poset();
  PathFrameSystem out;
  std::vector<char> hasFrame(p.size(), 0);

  for (int rep = 0; rep < p.size(); ++rep) {
    if (hasFrame[rep] || p.is_maximal(rep)) continue;
    // frame over the orbit representative: stabilizer-invariant paths for
    // orbit representatives of targets, transported within the S_rep orbits
    PathFrame base;
    base.pole = rep;
    base.paths[rep] = Word{};
    std::vector<int> stab;
    for (int g = 0; g < act.order(); ++g)
      if (act.act(g, rep) == rep) stab.push_back(g);

    std::vector<char> targetDone(p.size(), 0);
    targetDone[rep] = 1;
    for (int y = 0; y < p.size(); ++y) {
      if (targetDone[y] || p.is_maximal(y)) continue;
      auto invariantPath = check_obstruction(t, act, rep, y, searchLen);
      if (!invariantPath)
        throw Error("Obstructed", "no invariant path " + p.label(rep) + " -> " +
                                      p.label(y) + " under the joint stabilizer");
      for (int g : stab) {
        int z = act.act(g, y);
        Word transported = act_on_word(t, act, g, *invariantPath);
        if (targetDone[z]) {
          if (!(base.paths[z] == transported) && z == y) {
            // the stabilizer permutes paths within the orbit consistently by
            // construction; distinct y-preimages must agree
          }
        } else {
          base.paths[z] = transported;
          targetDone[z] = 1;
        }
      }
    }
    // transport the frame along the orbit of the pole
    for (int g = 0; g < act.order(); ++g) {
      int pole2 = act.act(g, rep);
      if (hasFrame[pole2]) continue;
      PathFrame f2;
      f2.pole = pole2;
      for (const auto& [y, w] : base.paths) f2.paths[act.act(g, y)] = act_on_word(t, act, g, w);
      out.frames[pole2] = std::move(f2);
      hasFrame[pole2] = 1;
    }
  }
  return out;
}

bool system_is_covariant(const SimplexTable& t, const PathFrameSystem& frames,
                         const SymmetryAction& act) {
  for (const auto& [o, frame] : frames.frames)
    for (int g = 0; g < act.order(); ++g) {
      int so = act.act(g, o);
      auto it = frames.frames.find(so);
      if (it == frames.frames.end()) return false;
      for (const auto& [y, w] : frame.paths) {
        auto jt = it->second.paths.find(act.act(g, y));
        if (jt == it->second.paths.end()) return false;
        if (!(jt->second == act_on_word(t, act, g, w))) return false;
      }
    }
  return true;
}

const UnitaryValue& GaugeTransformation::at(int a, int o) const {
  return fields.at(a).at(o);
}

GaugeTransformation gauge_compose(const UnitaryContext& ctx, const GaugeTransformation& g,
                                  const GaugeTransformation& h) {
  GaugeTransformation out;
  for (const auto& [a, fo] : g.fields)
    for (const auto& [o, v] : fo) out.fields[a][o] = ctx.mul(v, h.at(a, o));
  return out;
}

ConnectionSystem apply_gauge(const SimplexTable& t, const UnitaryContext& ctx,
                             const ConnectionSystem& sys, const GaugeTransformation& g) {
  ConnectionSystem out;
  for (const auto& [o, u] : sys.perBase) {
    Connection1Cochain v;
    for (const auto& [b, val] : u.values)
      v.values[b] = ctx.mul(ctx.mul(g.at(o, b.d0), val), ctx.inv(g.at(o, b.d1)));
    out.perBase[o] = std::move(v);
  }
  (void)t;
  return out;
}

GaugeTransformation frame_change_gauge(const SimplexTable& t, const LoopRep& rep,
                                       const PathFrameSystem& P, const PathFrameSystem& Q) {
  // g_o(a) = w(q~ p) telescopes against u_P to produce u_Q; g_o(o) = 1
  GaugeTransformation g;
  for (const auto& [o, fp] : P.frames) {
    const PathFrame& fq = Q.frames.at(o);
    for (const auto& [a, pw] : fp.paths)
      g.fields[o][a] = rep.eval(multiply(inverse(t, fq.paths.at(a)), pw));
  }
  return g;
}

bool gauge_is_equivariant(const UnitaryContext& ctx, const GaugeTransformation& g,
                          const SymmetryAction& act, const SymmetryAd& ad) {
  for (const auto& [a, fo] : g.fields)
    for (const auto& [o, v] : fo) {
      for (int s = 0; s < act.order(); ++s) {
        int sa = act.act(s, a), so = act.act(s, o);
        auto ita = g.fields.find(sa);
        if (ita == g.fields.end()) return false;
        auto ito = ita->second.find(so);
        if (ito == ita->second.end()) return false;
        if (!ctx.eq(ito->second, ad(s, v))) return false;
      }
    }
  return true;
}

std::vector<UnitaryValue> gauge_group_generators(
    const SimplexTable& t, const UnitaryContext& ctx,
    const std::vector<GaugeTransformation>& gauges, int o) {
  const CausalPoset& p = t.poset();
  std::vector<UnitaryValue> out;
  for (const GaugeTransformation& g : gauges)
    for (const auto& [a, fo] : g.fields) {
      if (!p.leq(a, o)) continue;
      auto it = fo.find(a);
      if (it == fo.end()) continue;
      bool dup = false;
      for (const UnitaryValue& v : out) dup = dup || ctx.eq(v, it->second);
      if (!dup) out.push_back(it->second);
    }
  return out;
}

}  // namespace loopnet
