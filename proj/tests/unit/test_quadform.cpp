#include <doctest.h>

#include <random>

#include "hesstop/errors.hpp"
#include "hesstop/quadform.hpp"
#include "oracles.hpp"

using namespace hesstop;

namespace {
HomoPoly poly(const char* s) { return parse_poly(s); }
const HomoPoly kX = HomoPoly::monomial(1, 0);
const HomoPoly kY = HomoPoly::monomial(0, 1);
}  // namespace

TEST_CASE("second fundamental form") {
  const QuadForm xy = second_fundamental_form(poly("x*y"));
  CHECK(xy.a.is_zero());
  CHECK(xy.b == HomoPoly::constant(1));
  CHECK(xy.c.is_zero());
  const QuadForm q = second_fundamental_form(poly("x^2+y^2"));
  CHECK(q == QuadForm(HomoPoly::constant(2), HomoPoly(0), HomoPoly::constant(2)));
  const QuadForm p3 = second_fundamental_form(family_P(3));
  CHECK(p3.a == poly("6*x"));
  CHECK(p3.b == poly("-6*y"));
  CHECK(p3.c == poly("-6*x"));
  CHECK(p3.degree() == 1);
  CHECK_THROWS_AS(second_fundamental_form(poly("x+y")), DomainError);
}

TEST_CASE("discriminant") {
  CHECK(discriminant(second_fundamental_form(poly("x*y"))) == HomoPoly::constant(1));
  CHECK(discriminant(second_fundamental_form(poly("x^2+y^2"))) == HomoPoly::constant(-4));
  CHECK(discriminant(second_fundamental_form(family_P(3))) == poly("36*x^2 + 36*y^2"));
}

TEST_CASE("dP dQ form") {
  const QuadForm w = dpdq_form(poly("x"), poly("y"));
  CHECK(w.a.is_zero());
  CHECK(w.b == HomoPoly::constant(1));
  CHECK(w.c.is_zero());
  const QuadForm s = dpdq_form(family_Q(1), family_Q(1));
  CHECK(s.a == poly("8*x^2"));
  CHECK(s.b == poly("8*x*y"));
  CHECK(s.c == poly("8*y^2"));
  CHECK(discriminant(s).is_zero());
  const QuadForm t = dpdq_form(family_P(2), family_Q(1));
  CHECK(t.a == poly("8*x^2"));
  CHECK(t.b.is_zero());
  CHECK(t.c == poly("-8*y^2"));
  CHECK_THROWS_AS(dpdq_form(HomoPoly::constant(1), poly("x")), DomainError);
}

TEST_CASE("bracket") {
  CHECK(bracket(family_P(2), family_Q(1)) == poly("-8*x^2 - 8*y^2"));
  CHECK(bracket(family_P(3), family_Q(1)) == Rational(-36) * family_Q(2));
  CHECK(bracket(poly("x^2"), poly("x")).is_zero());
  CHECK(bracket(poly("x^2"), poly("y^2")).is_zero());
  CHECK_THROWS_AS(bracket(poly("x"), poly("x")), DomainError);
}

TEST_CASE("discriminant expansion residual on worked pairs") {
  CHECK(discriminant_expansion_residual(family_P(3), family_Q(1)).is_zero());
  CHECK(discriminant_expansion_residual(poly("x^2"), poly("x^2+y^2")).is_zero());
  CHECK(discriminant_expansion_residual(poly("x*y"), poly("x^2")).is_zero());
}

TEST_CASE("path form coefficients") {
  const QuadForm w = second_fundamental_form(family_P(4));
  const QuadForm zero{HomoPoly(2), HomoPoly(2), HomoPoly(2)};
  const PathCoefficients c0 = path_form_coeffs(w, zero);
  CHECK(c0.a0 == discriminant(w));
  CHECK(c0.a1.is_zero());
  CHECK(c0.a2.is_zero());
  const PathCoefficients c1 = path_form_coeffs(w, w);
  CHECK(c1.a1 == Rational(2) * discriminant(w));
  CHECK(c1.a2 == discriminant(w));

  // omega + delta must have discriminant a0 + a1 + a2.
  const HomoPoly p = family_P(3), q = family_Q(1);
  const QuadForm omega = q * second_fundamental_form(p) + dpdq_form(p, q);
  const QuadForm delta = p * second_fundamental_form(q);
  const PathCoefficients c = path_form_coeffs(omega, delta);
  CHECK(c.a0 + c.a1 + c.a2 == discriminant(omega + delta));
  CHECK(c.a2 == p * p * discriminant(second_fundamental_form(q)));
}

TEST_CASE("random identities: expansion, Leibniz, dPdQ discriminant, linearity, Euler") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dp(2, 8), dq(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const HomoPoly p = oracle::random_poly(rng, dp(rng));
    const HomoPoly q = oracle::random_poly(rng, dq(rng));
    const HomoPoly q2 = oracle::random_poly(rng, q.degree());
    CAPTURE(p.to_string());
    CAPTURE(q.to_string());
    CHECK(discriminant_expansion_residual(p, q).is_zero());
    CHECK(leibniz_residual(p, q).is_zero());
    CHECK(discriminant(dpdq_form(p, q)) == jacobian_square(p, q));
    CHECK(bracket(p, q + q2) == bracket(p, q) + bracket(p, q2));

    // Hessian and discriminant against the term-map oracle.
    const QuadForm w = second_fundamental_form(p);
    const oracle::TermForm tw = oracle::hessian(oracle::terms_of(p));
    CHECK(oracle::same(w.a, tw.a));
    CHECK(oracle::same(w.b, tw.b));
    CHECK(oracle::same(w.c, tw.c));
    CHECK(oracle::same(discriminant(w), oracle::disc(tw)));
    for (const HomoPoly* h : {&w.a, &w.b, &w.c}) {
      CHECK(kX * partial(*h, Axis::X) + kY * partial(*h, Axis::Y) == Rational(p.degree() - 2) * *h);
    }
  }
}

TEST_CASE("Hopf form and reflection") {
  // Im(z^{m-2} dz^2) expands to a = Im z^{m-2}, b = Re z^{m-2}, c = -a.
  for (int m = 3; m <= 8; ++m) {
    CAPTURE(m);
    const auto [re, im] = oracle::complex_power(m - 2);
    const QuadForm h = hopf_form(m);
    CHECK(oracle::same(h.a, im));
    CHECK(oracle::same(h.b, re));
    CHECK(oracle::same(h.c, oracle::scale(im, -1)));
  }
  for (int m = 3; m <= 11; m += 2) {
    CAPTURE(m);
    const int s = ((m - 1) / 2) % 2 == 0 ? 1 : -1;
    CHECK(second_fundamental_form(family_P(m)).pullback_swap() == Rational(s * m * (m - 1)) * hopf_form(m));
  }
}

TEST_CASE("QuadForm degree checks") {
  CHECK_THROWS_AS(QuadForm(poly("x"), poly("x^2"), poly("y")), DegreeMismatch);
  CHECK_NOTHROW(QuadForm(poly("x"), HomoPoly(0), poly("y")));
}
