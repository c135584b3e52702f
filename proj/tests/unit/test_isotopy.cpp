#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hesstop/errors.hpp"
#include "hesstop/isotopy.hpp"
#include "hesstop/quadform.hpp"

using namespace hesstop;

namespace {
HomoPoly poly(const char* s) { return parse_poly(s); }

// Smallest sampled discriminant of omega + t delta over a t grid and circle grid.
double min_path_discriminant(const QuadForm& omega, const QuadForm& delta) {
  double lo = INFINITY;
  for (int it = 0; it <= 20; ++it) {
    const double t = it / 20.0;
    for (int i = 0; i < 360; ++i) {
      const double phi = 2 * std::numbers::pi * i / 360;
      const auto w = omega.eval(std::cos(phi), std::sin(phi));
      const auto d = delta.eval(std::cos(phi), std::sin(phi));
      const double A = w[0] + t * d[0], B = w[1] + t * d[1], C = w[2] + t * d[2];
      lo = std::min(lo, B * B - A * C);
    }
  }
  return lo;
}
}  // namespace

TEST_CASE("path sign check") {
  const HomoPoly one = HomoPoly::constant(1), zero = HomoPoly(0);
  CHECK(path_sign_check(one, zero, zero).holds);
  CHECK_FALSE(path_sign_check(one, HomoPoly::constant(-3), one).holds);
  const HomoPoly p = family_P(3), q = family_Q(1);
  const QuadForm omega = q * second_fundamental_form(p) + dpdq_form(p, q);
  const QuadForm delta = p * second_fundamental_form(q);
  const PathCoefficients c = path_form_coeffs(omega, delta);
  CHECK(path_sign_check(c.a0, c.a1, c.a2).holds);
}

TEST_CASE("direct path certificate") {
  const HomoPoly p = family_P(3), q = family_Q(1);
  const IsotopyCertificate c = direct_path_certify(p, q);
  CHECK(c.valid());
  CHECK(c.kind == IsotopyKind::DirectPath);
  CHECK(c.a0 == Rational(-1) * q * q * hessian_determinant(p));
  CHECK(c.a1 == Rational(-2) * q * bracket(p, q));
  CHECK(c.a2 == jacobian_square(p, q));
  for (int m = 2; m <= 8; ++m)
    for (int k = 1; k <= 4; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      CHECK(direct_path_certify(family_P(m), family_Q(k)).valid());
    }
  CHECK_THROWS_AS(direct_path_certify(family_Q(1), family_Q(1)), PreconditionFailed);
}

TEST_CASE("full isotopy certificate") {
  const IsotopyCertificate c = isotopy_certify(family_P(3), family_Q(1));
  CHECK(c.valid());
  CHECK(c.kind == IsotopyKind::Composite);
  CHECK(c.legs.size() == 2);
  CHECK(isotopy_certify(family_P(4), family_Q(1)).valid());
  try {
    isotopy_certify(family_P(3), poly("x^2 - y^2"));
    FAIL("expected PreconditionFailed");
  } catch (const PreconditionFailed& e) {
    CHECK(e.hypothesis().find("Q") != std::string::npos);
  }
  CHECK_THROWS_AS(isotopy_certify(family_Q(1), family_Q(1)), PreconditionFailed);
}

TEST_CASE("certified paths stay hyperbolic on a sampled grid") {
  for (int m = 3; m <= 7; ++m)
    for (int k = 1; k <= 3 && k < m; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      const HomoPoly p = family_P(m), q = family_Q(k);
      REQUIRE(isotopy_certify(p, q).valid());
      const QuadForm iip = second_fundamental_form(p);
      // Q II_P -> Q II_P + 2 dP dQ
      CHECK(min_path_discriminant(q * iip, dpdq_form(p, q)) > 0);
      // Q II_P + 2 dP dQ -> II_PQ
      CHECK(min_path_discriminant(q * iip + dpdq_form(p, q), p * second_fundamental_form(q)) > 0);
    }
}
