#include "oracles.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace loopnet::oracles {

Word fixpoint_reduce(const SimplexTable& t, const Word& w) {
  Word cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur.letters[i + 1] == letter_inverse(t, cur.letters[i])) {
        cur.letters.erase(cur.letters.begin() + i, cur.letters.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

bool partition_loop_membership(const SimplexTable& t, const Word& w) {
  Word r = reduce(t, w);
  std::size_t n = r.size();
  if (n == 0) return true;
  if (n > 20) throw Error("OracleTooBig", "partition oracle is exponential");
  for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
    std::size_t start = 0;
    bool good = true;
    for (std::size_t i = 0; i <= n - 1 && good; ++i) {
      bool cut = (i == n - 1) || (mask >> i & 1);
      if (!cut) continue;
      Word block;
      block.letters.assign(r.letters.begin() + start, r.letters.begin() + i + 1);
      auto lb = is_loop(t, block);
      good = lb.has_value() && !lb->everywhere;
      start = i + 1;
    }
    if (good) return true;
  }
  return false;
}

namespace {
void gauss_nodes(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * z * p1 - j * p2) / (j + 1);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p0 / pp;
      if (std::abs(z - z1) <= 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

std::array<double, 4> sample_cone_point(const DoubleConeQ& cone, std::mt19937_64& rng) {
  auto c = cone.center.to_double();
  double R = to_double(cone.radius);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (;;) {
    double t = R * u(rng);
    double rmax = R - std::abs(t);
    // uniform in the ball of radius rmax
    double x = u(rng), y = u(rng), z = u(rng);
    double n2 = x * x + y * y + z * z;
    if (n2 > 1.0 || n2 == 0.0) continue;
    double scale = rmax * std::cbrt(u01(rng)) / std::sqrt(n2);
    return {c[0] + t, c[1] + x * scale, c[2] + y * scale, c[3] + z * scale};
  }
}
}  // namespace

PerpSampling sample_cone_perp(const DoubleConeQ& a, const DoubleConeQ& b,
                              std::size_t pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PerpSampling out;
  out.pairs = pairs;
  for (std::size_t i = 0; i < pairs; ++i) {
    auto pa = sample_cone_point(a, rng);
    auto pb = sample_cone_point(b, rng);
    double dt = std::abs(pa[0] - pb[0]);
    double dx = std::hypot(pa[1] - pb[1], std::hypot(pa[2] - pb[2], pa[3] - pb[3]));
    if (dt >= dx) out.relatedPairFound = true;
  }
  return out;
}

std::complex<double> em_4d_oracle(const TestFunction& f, double mass,
                                  const std::array<double, 3>& p, int nodesPerDim) {
  double q = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  double om = std::sqrt(q * q + mass * mass);
  std::complex<double> total{0.0, 0.0};
  std::vector<double> gx, gw;
  gauss_nodes(nodesPerDim, gx, gw);
  for (const Atom& a : f.atoms()) {
    TestFunction single({a});
    const auto& m = std::get<MinkSupport>(a.where);
    auto c = m.center.to_double();
    double R = to_double(m.scale);
    double h = R / 2.0;  // support half width per axis
    for (int it = 0; it < nodesPerDim; ++it) {
      double t = c[0] + h * gx[it];
      double wt = h * gw[it];
      for (int ix = 0; ix < nodesPerDim; ++ix) {
        double x = c[1] + h * gx[ix];
        double wx = h * gw[ix];
        for (int iy = 0; iy < nodesPerDim; ++iy) {
          double y = c[2] + h * gx[iy];
          double wy = h * gw[iy];
          for (int iz = 0; iz < nodesPerDim; ++iz) {
            double z = c[3] + h * gx[iz];
            double wz = h * gw[iz];
            double val = single.eval_mink({t, x, y, z});
            if (val == 0.0) continue;
            double phase = om * t - (p[0] * x + p[1] * y + p[2] * z);
            total += wt * wx * wy * wz * val *
                     std::complex<double>{std::cos(phase), std::sin(phase)};
          }
        }
      }
    }
  }
  return total / (4.0 * M_PI * M_PI);
}

std::complex<double> inner_3d_oracle(const HyperboloidProfile& prof,
                                     const TestFunction& f, const TestFunction& g,
                                     int radialNodes, int angularNodes) {
  // spherical quadrature: composite Gauss panels in q, Gauss in theta,
  // periodic trapezoid in phi (spectrally accurate there)
  double L = prof.cutoff();
  std::vector<double> gx(8), gw(8), tx(angularNodes), tw(angularNodes);
  gauss_nodes(8, gx, gw);
  gauss_nodes(angularNodes, tx, tw);
  int panels = std::max(1, radialNodes / 8);
  int phiNodes = 2 * angularNodes;
  std::complex<double> total{0.0, 0.0};
  for (int p = 0; p < panels; ++p) {
    double a = L * p / panels, b = L * (p + 1) / panels;
    for (int iq = 0; iq < 8; ++iq) {
      double q = 0.5 * (a + b) + 0.5 * (b - a) * gx[iq];
      double wq = 0.5 * (b - a) * gw[iq];
      double om = prof.omega(q);
      for (int ith = 0; ith < angularNodes; ++ith) {
        double th = 0.5 * M_PI * (1.0 + tx[ith]);
        double wth = 0.5 * M_PI * tw[ith];
        for (int iph = 0; iph < phiNodes; ++iph) {
          double ph = 2.0 * M_PI * iph / phiNodes;
          double wph = 2.0 * M_PI / phiNodes;
          std::array<double, 3> dir{std::sin(th) * std::cos(ph),
                                    std::sin(th) * std::sin(ph), std::cos(th)};
          std::complex<double> ef = prof.em_point(f, q, dir);
          std::complex<double> eg = prof.em_point(g, q, dir);
          total += wq * wth * wph * q * q * std::sin(th) / om * std::conj(ef) * eg;
        }
      }
    }
  }
  return total;
}

Word random_word(const SimplexTable& t, std::mt19937_64& rng, std::size_t length) {
  std::uniform_int_distribution<int> canon(0, t.tangent_count() - 1);
  std::uniform_int_distribution<int> flip(0, 1);
  Word w;
  for (std::size_t i = 0; i < length; ++i) {
    int c = canon(rng);
    w.letters.push_back({c, t.involutive(c) ? false : flip(rng) == 1});
  }
  return w;
}

}  // namespace loopnet::oracles
