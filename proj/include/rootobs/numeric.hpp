// Exact arithmetic primitives shared by the whole library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace rootobs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Bad user input (CLI exit code 2).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency violation (CLI exit code 3). Always a bug.
struct integrity_error : std::runtime_error {
  explicit integrity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Brute-force oracle asked to enumerate beyond its size bound.
struct oracle_bound_error : std::runtime_error {
  explicit oracle_bound_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

// Floor division and the matching remainder in [0, |b|).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}
inline Int floor_mod(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

// Canonical representative of a rational mod 1, in [0, 1).
inline Rat mod1(const Rat& r) {
  Int n = numerator(r), d = denominator(r);  // d > 0 by cpp_rational normalization
  return Rat(floor_mod(n, d), d);
}

inline bool is_integral(const Rat& r) { return denominator(r) == 1; }

inline long long to_ll(const Int& v) {
  if (v > Int(std::numeric_limits<long long>::max()) ||
      v < Int(std::numeric_limits<long long>::min()))
    throw integrity_error("integer too large for 64-bit conversion: " + v.str());
  return v.convert_to<long long>();
}

}  // namespace rootobs
