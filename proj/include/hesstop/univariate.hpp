#pragma once

#include <vector>

#include "hesstop/rational.hpp"

namespace hesstop {

/// Dense univariate polynomial over the rationals, ascending coefficients,
/// trailing zeros trimmed. The zero polynomial has degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> ascending);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& t) const;
  int sign_at(const Rational& t) const { return sgn(eval(t)); }
  /// Sign as t -> +inf (dir = +1) or t -> -inf (dir = -1).
  int sign_at_infinity(int dir) const;

  UniPoly derivative() const;
  UniPoly monic() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

/// Exact Euclidean division; throws DomainError on a zero divisor.
DivMod divmod(const UniPoly& num, const UniPoly& den);
/// Monic gcd (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Sturm sequence p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i), computed with
/// exact rational remainders.
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& p);

  const std::vector<UniPoly>& sequence() const { return seq_; }
  int variations_at(const Rational& t) const;
  int variations_at_infinity(int dir) const;
  /// Distinct real roots in the half-open interval (lo, hi].
  int count_roots(const Rational& lo, const Rational& hi) const;
  /// Distinct real roots on the whole line.
  int count_real_roots() const;

 private:
  std::vector<UniPoly> seq_;
};

/// All real roots lie strictly inside (-B, B).
Rational cauchy_bound(const UniPoly& p);

/// Open interval (lo, hi) holding exactly one real root; p(lo), p(hi) != 0.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Disjoint isolating intervals of the distinct real roots, sorted ascending.
/// Requires p nonzero.
std::vector<RootInterval> isolate_real_roots(const UniPoly& p);

/// Shrinks an isolating interval by Sturm-guided bisection until its width is
/// below `width` or the root is found exactly (then lo == hi == root).
RootInterval refine_root(const UniPoly& p, const SturmChain& chain, RootInterval iv, const Rational& width);

}  // namespace hesstop
