#pragma once

#include <array>

#include "hesstop/homopoly.hpp"

namespace hesstop {

/// Quadratic differential form a dx^2 + 2b dxdy + c dy^2.
///
/// b is the off-diagonal entry, so the discriminant is literally b^2 - ac.
/// Nonzero coefficients share one degree.
struct QuadForm {
  HomoPoly a;
  HomoPoly b;
  HomoPoly c;

  QuadForm() = default;
  QuadForm(HomoPoly a_, HomoPoly b_, HomoPoly c_);

  /// Common degree of the nonzero coefficients (tag of a if all are zero).
  int degree() const;
  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }

  /// Coefficients (A, B, C) at a point.
  std::array<double, 3> eval(double x, double y) const;

  /// Pullback by the reflection T(u, v) = (v, u): swaps both the coefficient
  /// arguments and the differentials.
  QuadForm pullback_swap() const;

  QuadForm& operator+=(const QuadForm& other);
  QuadForm& operator-=(const QuadForm& other);
  friend QuadForm operator+(QuadForm lhs, const QuadForm& rhs) { return lhs += rhs; }
  friend QuadForm operator-(QuadForm lhs, const QuadForm& rhs) { return lhs -= rhs; }
  friend QuadForm operator*(const HomoPoly& s, const QuadForm& w) { return {s * w.a, s * w.b, s * w.c}; }
  friend QuadForm operator*(const Rational& s, const QuadForm& w) { return {s * w.a, s * w.b, s * w.c}; }
  friend bool operator==(const QuadForm& lhs, const QuadForm& rhs) {
    return lhs.a == rhs.a && lhs.b == rhs.b && lhs.c == rhs.c;
  }
};

/// II_f = f_xx dx^2 + 2 f_xy dxdy + f_yy dy^2. Requires deg f >= 2.
QuadForm second_fundamental_form(const HomoPoly& f);

/// b^2 - ac.
HomoPoly discriminant(const QuadForm& w);

/// The form 2 dP dQ: a = 2 P_x Q_x, b = P_x Q_y + P_y Q_x, c = 2 P_y Q_y.
QuadForm dpdq_form(const HomoPoly& p, const HomoPoly& q);

/// grad P . Hess P . grad Q^t
///   = P_xx P_y Q_y + P_yy P_x Q_x - P_xy (P_x Q_y + P_y Q_x).
HomoPoly bracket(const HomoPoly& p, const HomoPoly& q);

/// det Hess P = P_xx P_yy - P_xy^2.
HomoPoly hessian_determinant(const HomoPoly& p);

/// (P_x Q_y - P_y Q_x)^2, i.e. four times the discriminant of dP dQ.
HomoPoly jacobian_square(const HomoPoly& p, const HomoPoly& q);

/// Disc(Q II_P + 2 dP dQ) - [ -Q^2 det Hess P + 4 Disc(dP dQ) - 2 Q bracket(P, Q) ].
/// Zero for every admissible pair.
HomoPoly discriminant_expansion_residual(const HomoPoly& p, const HomoPoly& q);

/// II_{PQ} - (P II_Q + Q II_P + 2 dP dQ). Zero for every pair.
QuadForm leibniz_residual(const HomoPoly& p, const HomoPoly& q);

/// Discriminant of omega + t delta as a quadratic in t: a0 + a1 t + a2 t^2.
struct PathCoefficients {
  QuadForm omega;
  QuadForm delta;
  HomoPoly a0;  ///< Disc(omega)
  HomoPoly a1;  ///< 2 w2 d2 - w1 d3 - w3 d1
  HomoPoly a2;  ///< Disc(delta)
};

PathCoefficients path_form_coeffs(const QuadForm& omega, const QuadForm& delta);

/// Im((x + iy)^(m-2) (dx + i dy)^2) as a form: a = Im z^(m-2), b = Re z^(m-2), c = -a.
QuadForm hopf_form(int m);

}  // namespace hesstop
