#pragma once

// Exact integer / rational scalar layer shared by every module.
// All lattice and Pell arithmetic must be arbitrary precision: fundamental
// units blow past 64 bits already for d in the low hundreds.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3iso {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Int>;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
  Int g = boost::multiprecision::gcd(a, b);
  return g < 0 ? Int(-g) : g;
}

inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

// Quotient rounded toward minus infinity (cpp_int's operator/ truncates).
inline Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("floor_div: division by zero");
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// Remainder in [0, |b|).
inline Int mod_floor(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("mod_floor: division by zero");
  Int m = a % b;
  if (m < 0) m += abs_int(b);
  return m;
}

// floor(sqrt(n)) for n >= 0.
inline Int isqrt_floor(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt_floor: negative argument");
  Int r = boost::multiprecision::sqrt(n);
  // boost's sqrt is already the integer square root; guard against any
  // off-by-one from future library changes.
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
  if (n < 0) return false;
  Int r = isqrt_floor(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

// Inverse of a modulo m (m >= 1); throws when gcd(a, m) != 1.
inline Int mod_inverse(const Int& a, const Int& m) {
  if (m < 1) throw std::invalid_argument("mod_inverse: modulus must be positive");
  Int r0 = m, r1 = mod_floor(a, m);
  Int s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    Int s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw std::invalid_argument("mod_inverse: argument is not a unit");
  return mod_floor(s0, m);
}

inline std::string to_string(const Int& v) { return v.str(); }

// Reduce r into [0, modulus) as a rational (used for values mod 1 and mod 2).
inline Rat reduce_mod(const Rat& r, int modulus) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  Int m = Int(modulus) * den;
  return Rat(mod_floor(num, m), den);
}

}  // namespace k3iso
