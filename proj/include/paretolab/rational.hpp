/**
 * @file rational.hpp
 * @brief Arbitrary-precision integers and exact rationals used by the
 *        closed-form combinatorial formulas.
 */

#ifndef PARETOLAB_RATIONAL_HPP
#define PARETOLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>

namespace paretolab {

using BigInt = boost::multiprecision::cpp_int;
// Always reduced, denominator > 0; use numerator(r) / denominator(r).
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: prefix products of consecutive integers divide evenly
  }
  return r;
}

/// 2^e as an exact integer, e >= 0.
inline BigInt pow2(long long e) {
  if (e < 0) throw std::invalid_argument("pow2 exponent must be >= 0");
  BigInt r = 1;
  r <<= e;
  return r;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact conversion of a finite double into a rational.
inline Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  // 53 bits make the scaled mantissa integral.
  const double mant = std::frexp(x, &exp);
  const long long scaled = (long long)(std::ldexp(mant, 53));
  const int shift = exp - 53;
  Rational r(scaled);
  if (shift >= 0) {
    r *= Rational(pow2(shift));
  } else {
    r /= Rational(pow2(-shift));
  }
  return r;
}

}  // namespace paretolab

#endif  // PARETOLAB_RATIONAL_HPP
