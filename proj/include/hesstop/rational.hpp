#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hesstop {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; values built from raw parts are canonicalized
// explicitly.
using BigInt = mpz_class;
using Rational = mpq_class;

/// "num/den", always with an explicit denominator.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Parses "a" or "a/b" with optional leading sign.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const BigInt& z) { return sgn(z); }
inline double to_double(const Rational& q) { return q.get_d(); }

/// Binomial coefficient with C(a, b) = 0 whenever b < 0, b > a or a < 0.
BigInt binomial(long a, long b);

/// The rational with smallest denominator strictly inside (lo, hi), lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace hesstop
