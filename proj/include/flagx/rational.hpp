#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace flagx {

using Rational = mpq_class;

/// Canonical "p/q" text (plain "p" when q == 1).
std::string to_string(const Rational& r);

/// Parses "p", "p/q" or "-p/q"; throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double x) { return x; }

/// Exact zero test that also accepts doubles (with no tolerance).
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

template <class Scalar>
Scalar from_rational(const Rational& r) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return r;
  } else {
    return static_cast<Scalar>(r.get_d());
  }
}

}  // namespace flagx
