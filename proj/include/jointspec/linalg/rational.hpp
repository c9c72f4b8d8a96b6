#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace jointspec {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }

inline double abs_value(double x) { return std::fabs(x); }
inline double abs_value(const Rational& x) { return std::fabs(x.get_d()); }

/// Exact conversion of a finite double into a rational.
inline Rational to_rational(double x) {
  if (!std::isfinite(x)) throw std::domain_error("cannot convert non-finite value to rational");
  return Rational(x);
}

inline bool is_integer_value(double x) {
  return std::isfinite(x) && std::nearbyint(x) == x;
}

template <class T>
T from_int(long long v) {
  if constexpr (std::is_same_v<T, Rational>) {
    return Rational(mpz_class(std::to_string(v)));
  } else {
    return static_cast<T>(v);
  }
}

template <class T>
T ipow(const T& base, unsigned exponent) {
  T result = from_int<T>(1);
  T b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent > 0) b *= b;
  }
  return result;
}

inline std::string to_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace jointspec
