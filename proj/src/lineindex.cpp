#include "hesstop/lineindex.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "hesstop/errors.hpp"

namespace hesstop {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_line(double theta) {
  double t = std::fmod(theta, kPi);
  if (t < 0) t += kPi;
  if (t >= kPi) t -= kPi;
  return t;
}

// Into (-pi, pi].
double wrap_signed(double a) {
  double t = std::remainder(a, 2 * kPi);
  if (t <= -kPi) t += 2 * kPi;
  return t;
}

}  // namespace

NumericForm::NumericForm(const QuadForm& w)
    : a_(w.a.coeffs_double()), b_(w.b.coeffs_double()), c_(w.c.coeffs_double()), degree_(w.degree()) {}

double NumericForm::horner(const std::vector<double>& c, double x, double y) {
  double acc = c[0];
  double ypow = 1.0;
  for (std::size_t j = 1; j < c.size(); ++j) {
    ypow *= y;
    acc = acc * x + c[j] * ypow;
  }
  return acc;
}

std::array<double, 3> NumericForm::eval(double x, double y) const {
  return {horner(a_, x, y), horner(b_, x, y), horner(c_, x, y)};
}

LinePair asymptotic_directions(const NumericForm& w, double x, double y) {
  const auto [A, B, C] = w.eval(x, y);
  const double half_diff = 0.5 * (A - C);
  const double half_sum = 0.5 * (A + C);
  const double exact_disc = std::fma(B, B, -(A * C));
  const double scale = A * A + B * B + C * C;
  if (!(exact_disc > 1e-12 * scale) || scale == 0.0) throw NotHyperbolicHere(x, y, exact_disc);
  const double psi = std::atan2(B, half_diff);
  const double alpha = std::atan2(std::sqrt(exact_disc), -half_sum);
  return {wrap_line(0.5 * (psi + alpha)), wrap_line(0.5 * (psi - alpha))};
}

LinePair asymptotic_directions(const QuadForm& w, double x, double y) {
  return asymptotic_directions(NumericForm(w), x, y);
}

double line_distance(double a, double b) {
  const double d = std::abs(wrap_line(a - b));
  return std::min(d, kPi - d);
}

double branch_continuation(double prev, const LinePair& pair) {
  const double d1 = line_distance(prev, pair.plus);
  const double d2 = line_distance(prev, pair.minus);
  if (std::abs(d1 - d2) < 1e-9) throw AmbiguousBranch("both asymptotic lines equidistant from the tracked line");
  return d1 < d2 ? pair.plus : pair.minus;
}

std::string HalfIndex::to_string() const {
  if (numerator % 2 == 0) return std::to_string(numerator / 2);
  return std::to_string(numerator) + "/2";
}

namespace {

struct Tracker {
  const NumericForm& form;
  double radius;
  int max_depth;
  DirectionTrace& trace;
  std::size_t evaluations = 0;

  LinePair at(double phi) {
    ++evaluations;
    return asymptotic_directions(form, radius * std::cos(phi), radius * std::sin(phi));
  }

  // Advances the tracked line from (phi0, theta0) to phi1, recording samples.
  void step(double phi0, double theta0, double phi1, int depth) {
    if (depth > trace.refinement_depth) trace.refinement_depth = depth;
    const LinePair pair = at(phi1);
    double next = 0.0;
    bool split = false;
    try {
      next = branch_continuation(theta0, pair);
      split = std::abs(wrap_signed(2.0 * (next - theta0))) > kPi / 2;
    } catch (const AmbiguousBranch&) {
      split = true;
    }
    if (split) {
      if (depth >= max_depth) throw RefinementLimit("doubled-angle jump bound not met at depth " + std::to_string(depth));
      const double mid = 0.5 * (phi0 + phi1);
      step(phi0, theta0, mid, depth + 1);
      const DirectionSample& last = trace.samples.back();
      step(mid, last.theta, phi1, depth + 1);
      return;
    }
    const double jump = wrap_signed(2.0 * (next - theta0));
    trace.samples.push_back({phi1, next, trace.samples.back().doubled + jump});
  }
};

}  // namespace

IndexResult index_at_origin(const QuadForm& w, const IndexOptions& options) {
  if (options.n_initial < 64) throw DomainError("index_at_origin needs n_initial >= 64");
  if (!(options.radius > 0)) throw DomainError("index_at_origin needs a positive radius");
  const NumericForm form(w);
  IndexResult out;
  Tracker tracker{form, options.radius, options.max_depth, out.trace};
  const double theta0 = branch_angle(tracker.at(0.0), options.branch);
  out.trace.samples.push_back({0.0, theta0, 2.0 * theta0});
  const double h = 2 * kPi / options.n_initial;
  for (int i = 0; i < options.n_initial; ++i) {
    const double phi0 = i * h;
    const double phi1 = (i + 1 == options.n_initial) ? 2 * kPi : (i + 1) * h;
    tracker.step(phi0, out.trace.samples.back().theta, phi1, 0);
  }
  const double total = out.trace.samples.back().doubled - out.trace.samples.front().doubled;
  const double raw = total / (4 * kPi);
  out.index.numerator = std::lround(2 * raw);
  out.index.residual = std::abs(raw - 0.5 * static_cast<double>(out.index.numerator));
  out.samples_used = tracker.evaluations;
  if (out.index.residual >= 0.05) {
    throw RefinementLimit("winding " + std::to_string(raw) + " is not near a half-integer");
  }
  return out;
}

}  // namespace hesstop
