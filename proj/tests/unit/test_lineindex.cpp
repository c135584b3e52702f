#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hesstop/errors.hpp"
#include "hesstop/lineindex.hpp"
#include "hesstop/quadform.hpp"
#include "oracles.hpp"

using namespace hesstop;
using std::numbers::pi;

namespace {
QuadForm II(const HomoPoly& f) { return second_fundamental_form(f); }

// The line at angle theta solves A u^2 + 2B uv + C v^2 = 0.
double residual(const QuadForm& w, double x, double y, double theta) {
  const auto [A, B, C] = w.eval(x, y);
  const double u = std::cos(theta), v = std::sin(theta);
  return A * u * u + 2 * B * u * v + C * v * v;
}
}  // namespace

TEST_CASE("asymptotic directions") {
  const LinePair xy = asymptotic_directions(II(parse_poly("x*y")), 0.3, -0.7);
  CHECK(std::min(line_distance(xy.plus, 0), line_distance(xy.minus, 0)) < 1e-12);
  CHECK(std::min(line_distance(xy.plus, pi / 2), line_distance(xy.minus, pi / 2)) < 1e-12);

  // II_{P^3} at (1,1): 6 du^2 - 12 du dv - 6 dv^2, slopes -1 +- sqrt 2.
  const QuadForm w = II(family_P(3));
  const LinePair d = asymptotic_directions(w, 1, 1);
  const double s1 = std::atan(-1 + std::sqrt(2.0)), s2 = std::atan(-1 - std::sqrt(2.0));
  CHECK(std::min(line_distance(d.plus, s1), line_distance(d.minus, s1)) < 1e-12);
  CHECK(std::min(line_distance(d.plus, s2), line_distance(d.minus, s2)) < 1e-12);
  // At (1,0) the slopes are +-1.
  const LinePair e = asymptotic_directions(w, 1, 0);
  CHECK(std::min(line_distance(e.plus, pi / 4), line_distance(e.minus, pi / 4)) < 1e-12);
  CHECK(std::min(line_distance(e.plus, 3 * pi / 4), line_distance(e.minus, 3 * pi / 4)) < 1e-12);

  CHECK_THROWS_AS(asymptotic_directions(II(family_Q(1)), 1, 0), NotHyperbolicHere);
  // A ~ 0 and C ~ 0 are both handled.
  for (const char* f : {"x*y^2", "x^2*y", "x^3 - 3*x*y^2"}) {
    const QuadForm q = II(parse_poly(f));
    for (int i = 0; i < 36; ++i) {
      const double phi = 2 * pi * (i + 0.25) / 36;
      const double x = std::cos(phi), y = std::sin(phi);
      const auto [A, B, C] = q.eval(x, y);
      if (B * B - A * C <= 1e-9) continue;
      const LinePair l = asymptotic_directions(q, x, y);
      CHECK(std::abs(residual(q, x, y, l.plus)) < 1e-9);
      CHECK(std::abs(residual(q, x, y, l.minus)) < 1e-9);
    }
  }
}

TEST_CASE("branch continuation") {
  CHECK(branch_continuation(0, {0.1, 1.5}) == doctest::Approx(0.1));
  CHECK(branch_continuation(3.0, {0.05, 1.6}) == doctest::Approx(0.05));
  CHECK_THROWS_AS(branch_continuation(0, {0.5, pi - 0.5}), AmbiguousBranch);
  CHECK(line_distance(0.1, pi - 0.1) == doctest::Approx(0.2));
}

TEST_CASE("index of simple fields") {
  const IndexResult r = index_at_origin(II(parse_poly("x*y")));
  CHECK(r.index.numerator == 0);
  CHECK(r.index.to_string() == "0");
  CHECK_THROWS_AS(index_at_origin(II(family_Q(2))), NotHyperbolicHere);
  IndexOptions small;
  small.n_initial = 32;
  CHECK_THROWS_AS(index_at_origin(II(family_P(3)), small), DomainError);
}

TEST_CASE("index law for P^m, both branches, several radii") {
  for (int m = 3; m <= 10; ++m) {
    CAPTURE(m);
    const QuadForm w = II(family_P(m));
    const IndexResult plus = index_at_origin(w);
    CHECK(plus.index.numerator == 2 - m);
    CHECK(plus.index.residual < 0.01);
    IndexOptions o;
    o.branch = Branch::Minus;
    CHECK(index_at_origin(w, o).index == plus.index);
    o.branch = Branch::Plus;
    o.radius = 0.5;
    CHECK(index_at_origin(w, o).index == plus.index);
    o.radius = 2.0;
    CHECK(index_at_origin(w, o).index == plus.index);
    CHECK(std::lround(oracle::doubled_index(w)) == 2 - m);
  }
  CHECK(index_at_origin(II(family_P(3))).index.to_string() == "-1/2");
  CHECK(index_at_origin(II(family_P(4))).index.to_string() == "-1");
}

TEST_CASE("index of products matches the oracle") {
  for (int m = 3; m <= 7; ++m)
    for (int k = 1; k < m && m + 2 * k <= 11; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      const QuadForm w = II(family_f(m, k));
      const IndexResult r = index_at_origin(w);
      CHECK(r.index.numerator == 2 - m);
      CHECK(std::lround(oracle::doubled_index(w)) == r.index.numerator);
      IndexOptions o;
      o.branch = Branch::Minus;
      CHECK(index_at_origin(w, o).index == r.index);
    }
}

TEST_CASE("direction trace invariants") {
  const IndexResult r = index_at_origin(II(family_f(5, 2)));
  const auto& s = r.trace.samples;
  REQUIRE(s.size() >= 1025);
  CHECK(r.samples_used == s.size());
  CHECK(s.front().phi == 0.0);
  CHECK(s.back().phi == doctest::Approx(2 * pi));
  CHECK(line_distance(s.front().theta, s.back().theta) < 1e-9);
  for (std::size_t i = 1; i < s.size(); ++i) {
    CHECK(std::abs(s[i].doubled - s[i - 1].doubled) < pi / 2);
    CHECK(s[i].phi > s[i - 1].phi);
  }
}
