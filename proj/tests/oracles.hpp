#pragma once
// Independent reference computations for the test suite. Nothing here calls
// into the library's arithmetic: polynomials are sparse term maps, binomial
// expansions come from repeated complex multiplication, and numeric checks use
// plain sampling.

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "hesstop/homopoly.hpp"
#include "hesstop/quadform.hpp"

namespace oracle {

using hesstop::BigInt;
using hesstop::HomoPoly;
using hesstop::Rational;

// x^i y^j -> coefficient
using TermMap = std::map<std::pair<int, int>, Rational>;

inline TermMap terms_of(const HomoPoly& p) {
  TermMap t;
  const int d = p.degree();
  for (int j = 0; j <= d; ++j)
    if (p.coeff(j) != 0) t[{d - j, j}] = p.coeff(j);
  return t;
}

inline void prune(TermMap& t) {
  for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
}

inline TermMap mul(const TermMap& a, const TermMap& b) {
  TermMap out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  prune(out);
  return out;
}

inline TermMap add(TermMap a, const TermMap& b, int sign = 1) {
  for (const auto& [e, c] : b) a[e] += sign * c;
  prune(a);
  return a;
}

inline TermMap scale(TermMap a, const Rational& s) {
  for (auto& [e, c] : a) c *= s;
  prune(a);
  return a;
}

inline TermMap diff(const TermMap& a, bool in_x) {
  TermMap out;
  for (const auto& [e, c] : a) {
    const int p = in_x ? e.first : e.second;
    if (p == 0) continue;
    out[in_x ? std::pair{p - 1, e.second} : std::pair{e.first, p - 1}] += c * p;
  }
  prune(out);
  return out;
}

inline bool same(const HomoPoly& p, const TermMap& t) {
  TermMap tp = terms_of(p);
  TermMap tt = t;
  prune(tt);
  return tp == tt;
}

// (x + iy)^m by repeated multiplication; returns (Re, Im) as term maps.
inline std::pair<TermMap, TermMap> complex_power(int m) {
  TermMap re{{{0, 0}, Rational(1)}}, im;
  const TermMap x{{{1, 0}, Rational(1)}}, y{{{0, 1}, Rational(1)}};
  for (int i = 0; i < m; ++i) {
    // (re + i im)(x + i y) = (re x - im y) + i (re y + im x)
    TermMap nre = add(mul(re, x), mul(im, y), -1);
    TermMap nim = add(mul(re, y), mul(im, x));
    re = std::move(nre);
    im = std::move(nim);
  }
  return {re, im};
}

// Hessian-form oracle on term maps: (f_xx, f_xy, f_yy).
struct TermForm {
  TermMap a, b, c;
};

inline TermForm hessian(const TermMap& f) {
  const TermMap fx = diff(f, true), fy = diff(f, false);
  return {diff(fx, true), diff(fx, false), diff(fy, false)};
}

inline TermMap disc(const TermForm& w) { return add(mul(w.b, w.b), mul(w.a, w.c), -1); }

// Seeded random homogeneous polynomial with small integer coefficients.
inline HomoPoly random_poly(std::mt19937_64& rng, int degree, int range = 5) {
  std::uniform_int_distribution<int> coef(-range, range);
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  bool any = false;
  for (auto& v : c) {
    v = coef(rng);
    any = any || v != 0;
  }
  if (!any) c.front() = 1;
  return HomoPoly(degree, c);
}

// Signs of p sampled at n angles of the unit circle: returns (saw_positive, saw_negative).
inline std::pair<bool, bool> circle_signs(const HomoPoly& p, int n) {
  bool pos = false, neg = false;
  for (int i = 0; i < n; ++i) {
    const double phi = 2 * std::numbers::pi * (i + 0.5) / n;
    const double v = p.eval(std::cos(phi), std::sin(phi));
    pos = pos || v > 1e-9;
    neg = neg || v < -1e-9;
  }
  return {pos, neg};
}

// Index at the origin by a route independent of the library: one asymptotic
// direction per sample as a unit vector (a null vector of the form), carried
// around the circle by sign continuity of the inner product, with the angle
// accumulated by atan2 of consecutive vectors. Returns twice the index.
inline double doubled_index(const hesstop::QuadForm& w, int n = 20000) {
  auto null_vector = [&](double x, double y, double px, double py) {
    const auto [A, B, C] = w.eval(x, y);
    const double s = std::sqrt(std::max(B * B - A * C, 0.0));
    // candidates: A u^2 + 2B u v + C v^2 = 0
    double c1x, c1y, c2x, c2y;
    if (std::abs(A) >= std::abs(C)) {
      c1x = -B + s, c1y = A;
      c2x = -B - s, c2y = A;
    } else {
      c1x = C, c1y = -B + s;
      c2x = C, c2y = -B - s;
    }
    const double n1 = std::hypot(c1x, c1y), n2 = std::hypot(c2x, c2y);
    c1x /= n1, c1y /= n1, c2x /= n2, c2y /= n2;
    const double d1 = std::abs(c1x * px + c1y * py), d2 = std::abs(c2x * px + c2y * py);
    double ux = d1 >= d2 ? c1x : c2x, uy = d1 >= d2 ? c1y : c2y;
    if (ux * px + uy * py < 0) ux = -ux, uy = -uy;
    return std::pair{ux, uy};
  };
  auto [px, py] = null_vector(1, 0, 1, 0);
  double total = 0;
  for (int i = 1; i <= n; ++i) {
    const double phi = 2 * std::numbers::pi * i / n;
    auto [ux, uy] = null_vector(std::cos(phi), std::sin(phi), px, py);
    total += std::atan2(px * uy - py * ux, px * ux + py * uy);
    px = ux, py = uy;
  }
  return total / std::numbers::pi;
}

// Number of circle angles where the polynomial x^2 a + 2xy b + y^2 c changes
// sign: each is a ray on which some asymptotic line is radial.
inline int radial_ray_count(const hesstop::QuadForm& w, int n = 200000) {
  auto g = [&](double phi) {
    const double x = std::cos(phi), y = std::sin(phi);
    const auto [A, B, C] = w.eval(x, y);
    return A * x * x + 2 * B * x * y + C * y * y;
  };
  int count = 0;
  double prev = g(0.5 * 2 * std::numbers::pi / n);
  for (int i = 1; i <= n; ++i) {
    const double cur = g((i + 0.5) * 2 * std::numbers::pi / n);
    if ((prev < 0) != (cur < 0)) ++count;
    prev = cur;
  }
  return count;
}

}  // namespace oracle
