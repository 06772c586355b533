#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace nilcount {

// All counts are exact arbitrary-precision integers; intermediate sums of
// orbit-counting formulas are exact rationals, floored once at the end.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRat& q) { return BigInt(boost::multiprecision::numerator(q)); }
inline BigInt rat_den(const BigRat& q) { return BigInt(boost::multiprecision::denominator(q)); }

// floor(p/q) for q > 0, correct for negative p as well.
inline BigInt floor_rat(const BigRat& q) {
  BigInt n = rat_num(q);
  BigInt d = rat_den(q);
  BigInt t = n / d;
  if (n < 0 && t * d != n) {
    --t;
  }
  return t;
}

inline bool is_integral(const BigRat& q) { return rat_den(q) == 1; }

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// Canonical "p/q" spelling, denominator always present.
inline std::string to_fraction_string(const BigRat& q) {
  return rat_num(q).str() + "/" + rat_den(q).str();
}

inline BigInt pow_int(const BigInt& base, unsigned long exp) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

}  // namespace nilcount
