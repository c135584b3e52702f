#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hesstop/rational.hpp"

namespace hesstop {

enum class Axis { X, Y };

/// Exact bivariate homogeneous polynomial.
///
/// coeffs()[j] is the coefficient of x^(degree - j) y^j. The zero polynomial
/// keeps its degree tag so that degree-checked addition stays total; equality
/// treats every zero polynomial as equal regardless of the tag.
class HomoPoly {
 public:
  /// Zero polynomial of degree 0.
  HomoPoly() : HomoPoly(0) {}
  /// Zero polynomial of the given degree.
  explicit HomoPoly(int degree);
  /// Throws DomainError unless coeffs.size() == degree + 1.
  HomoPoly(int degree, std::vector<Rational> coeffs);

  static HomoPoly constant(const Rational& c);
  static HomoPoly monomial(int x_power, int y_power, const Rational& c = 1);

  int degree() const { return degree_; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  const Rational& coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  bool is_zero() const;

  Rational eval(const Rational& x, const Rational& y) const;
  double eval(double x, double y) const;

  HomoPoly partial(Axis axis) const;
  HomoPoly pow(unsigned exponent) const;
  /// p(y, x).
  HomoPoly swapped() const;
  /// Copy of the coefficients as doubles.
  std::vector<double> coeffs_double() const;

  /// Canonical text, descending powers of x: "x^3 - 3*x*y^2".
  std::string to_string() const;

  HomoPoly operator-() const;
  HomoPoly& operator+=(const HomoPoly& other);
  HomoPoly& operator-=(const HomoPoly& other);
  HomoPoly& operator*=(const Rational& s);

  friend HomoPoly operator+(HomoPoly lhs, const HomoPoly& rhs) { return lhs += rhs; }
  friend HomoPoly operator-(HomoPoly lhs, const HomoPoly& rhs) { return lhs -= rhs; }
  friend HomoPoly operator*(const HomoPoly& lhs, const HomoPoly& rhs);
  friend HomoPoly operator*(HomoPoly lhs, const Rational& s) { return lhs *= s; }
  friend HomoPoly operator*(const Rational& s, HomoPoly rhs) { return rhs *= s; }
  friend bool operator==(const HomoPoly& lhs, const HomoPoly& rhs);

 private:
  int degree_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const HomoPoly& p);

/// Parses the polynomial text grammar:
///   poly := term (('+'|'-') term)*
///   term := [coef] ['*'] [x-part] ['*'] [y-part]
///   coef := integer | integer '/' integer
/// Throws SyntaxError or NotHomogeneous.
HomoPoly parse_poly(std::string_view text);

HomoPoly partial(const HomoPoly& p, Axis axis);
HomoPoly multiply(const HomoPoly& p, const HomoPoly& q);
Rational eval(const HomoPoly& p, const Rational& x, const Rational& y);

/// Re (x + iy)^k for any k >= 0.
HomoPoly re_power(int k);
/// Im (x + iy)^k for any k >= 0.
HomoPoly im_power(int k);

/// P^m = Re (x + iy)^m, m >= 2.
HomoPoly family_P(int m);
/// Q^{2k} = (x^2 + y^2)^k, k >= 0.
HomoPoly family_Q(int k);
/// P^m * Q^{2k}.
HomoPoly family_f(int m, int k);

}  // namespace hesstop
