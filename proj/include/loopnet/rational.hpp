#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace loopnet {

// Exact arithmetic for all order/disjointness predicates. Lattice fixtures
// keep denominators tiny, so long long never overflows here.
using Rat = boost::rational<long long>;

inline Rat rat_abs(const Rat& r) { return r < 0 ? -r : r; }
inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Rat parse_rat(const std::string& text);  // "3", "-1/2"
std::string rat_to_string(const Rat& r);

// (t, x, y, z) with rational entries.
struct Vec4Q {
  Rat t{0}, x{0}, y{0}, z{0};

  friend Vec4Q operator+(const Vec4Q& a, const Vec4Q& b) {
    return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Vec4Q operator-(const Vec4Q& a, const Vec4Q& b) {
    return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Vec4Q operator-(const Vec4Q& a) { return {-a.t, -a.x, -a.y, -a.z}; }
  friend bool operator==(const Vec4Q& a, const Vec4Q& b) = default;
  friend bool operator<(const Vec4Q& a, const Vec4Q& b) {
    if (a.t != b.t) return a.t < b.t;
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  }

  Rat space_norm_sq() const { return x * x + y * y + z * z; }
  std::array<double, 4> to_double() const {
    return {loopnet::to_double(t), loopnet::to_double(x), loopnet::to_double(y),
            loopnet::to_double(z)};
  }
};

// Error with a stable machine-readable code, surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

std::uint64_t fnv1a64(const void* data, std::size_t n);
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace loopnet
