#pragma once

#include <optional>
#include <string>
#include <utility>

#include "hesstop/homopoly.hpp"
#include "hesstop/quadform.hpp"
#include "hesstop/univariate.hpp"

namespace hesstop {

enum class Verdict { PositiveDefinite, NegativeDefinite, Mixed, IdenticallyZero };

/// For a Mixed verdict: whether the polynomial keeps one sign (with zeros).
enum class Semidefinite { None, NonNegative, NonPositive };

const char* to_string(Verdict v);
const char* to_string(Semidefinite s);

/// A rational point whose value violates the definiteness of the reference sign.
///
/// When the violation is an irrational zero, `slice_interval` holds an
/// isolating interval (lo, hi) of that zero on the slice x = 1 and (x, y) is a
/// point inside it; `value` is then not itself of violating sign.
struct Witness {
  Rational x;
  Rational y;
  Rational value;
  std::optional<std::pair<Rational, Rational>> slice_interval;
};

/// Exact sign verdict for a homogeneous polynomial on the punctured plane.
struct SignCertificate {
  Verdict verdict = Verdict::IdenticallyZero;
  Semidefinite semidefinite = Semidefinite::None;
  /// Sign of the polynomial at the first nonzero sample, for Mixed verdicts.
  int reference_sign = 0;
  std::optional<Witness> witness;
  std::string method;
  /// Number of distinct lines through the origin on which the polynomial vanishes.
  int zero_lines = 0;

  bool positive() const { return verdict == Verdict::PositiveDefinite; }
  bool negative() const { return verdict == Verdict::NegativeDefinite; }
  /// p >= 0 everywhere (includes identically zero).
  bool nonnegative() const;
  /// p <= 0 everywhere (includes identically zero).
  bool nonpositive() const;
};

/// p(x, y) restricted to the slice x = 1, as a polynomial in t = y.
UniPoly slice(const HomoPoly& p);

/// Exact sign pattern of p on R^2 \ {0}.
///
/// The real roots of the slice u(t) = p(1, t) are isolated with a Sturm chain;
/// together with the x-axis factor x^a they split the circle of directions into
/// sectors of constant sign, each sampled at a rational point.
SignCertificate sign_on_punctured_plane(const HomoPoly& p);

struct Classification {
  bool holds = false;
  SignCertificate certificate;  ///< certificate of the discriminant of II_f
};

/// f is hyperbolic iff Disc(II_f) > 0 off the origin. Requires deg f >= 2.
Classification is_hyperbolic(const HomoPoly& f);
/// f is elliptic iff Disc(II_f) < 0 off the origin. Requires deg f >= 2.
Classification is_elliptic(const HomoPoly& f);

struct PolarCriterion {
  BigInt max_value;  ///< 4k(m+k) - m^2(m+2k-1)
  bool hyperbolic = false;
};

/// Arnold's polar criterion for r^(m+2k) cos(m phi): the left side of
/// n^2 F^2 + n F F'' - (n-1) F'^2 < 0 equals cos^2(m phi) 4k(m+k) - m^2(m+2k-1),
/// maximal at cos^2 = 1. Requires m >= 2, k >= 0.
PolarCriterion polar_criterion_cos_family(int m, int k);

struct InequalityCertificate {
  bool holds = false;
  HomoPoly bracket;
  SignCertificate certificate;  ///< certificate of bracket(p, q)
};

/// Certifies bracket(p, q) <= 0 on the whole plane.
InequalityCertificate verify_inequality_one(const HomoPoly& p, const HomoPoly& q);

}  // namespace hesstop
