#include "hesstop/quadform.hpp"

#include "hesstop/errors.hpp"

namespace hesstop {

namespace {

void check_degrees(const QuadForm& w) {
  int d = -1;
  for (const HomoPoly* p : {&w.a, &w.b, &w.c}) {
    if (p->is_zero()) continue;
    if (d >= 0 && p->degree() != d) throw DegreeMismatch(d, p->degree());
    d = p->degree();
  }
}

}  // namespace

QuadForm::QuadForm(HomoPoly a_, HomoPoly b_, HomoPoly c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  check_degrees(*this);
}

int QuadForm::degree() const {
  for (const HomoPoly* p : {&a, &b, &c}) {
    if (!p->is_zero()) return p->degree();
  }
  return a.degree();
}

std::array<double, 3> QuadForm::eval(double x, double y) const { return {a.eval(x, y), b.eval(x, y), c.eval(x, y)}; }

QuadForm QuadForm::pullback_swap() const {
  // x = v, y = u, dx = dv, dy = du: A(v,u) dv^2 + 2B(v,u) du dv + C(v,u) du^2.
  return {c.swapped(), b.swapped(), a.swapped()};
}

QuadForm& QuadForm::operator+=(const QuadForm& other) {
  a += other.a;
  b += other.b;
  c += other.c;
  check_degrees(*this);
  return *this;
}

QuadForm& QuadForm::operator-=(const QuadForm& other) {
  a -= other.a;
  b -= other.b;
  c -= other.c;
  check_degrees(*this);
  return *this;
}

QuadForm second_fundamental_form(const HomoPoly& f) {
  if (f.degree() < 2) throw DomainError("second fundamental form needs degree >= 2, got " + std::to_string(f.degree()));
  const HomoPoly fx = f.partial(Axis::X);
  const HomoPoly fy = f.partial(Axis::Y);
  return {fx.partial(Axis::X), fx.partial(Axis::Y), fy.partial(Axis::Y)};
}

HomoPoly discriminant(const QuadForm& w) { return w.b * w.b - w.a * w.c; }

QuadForm dpdq_form(const HomoPoly& p, const HomoPoly& q) {
  if (p.degree() < 1 || q.degree() < 1) throw DomainError("dP dQ needs non-constant polynomials");
  const HomoPoly px = p.partial(Axis::X), py = p.partial(Axis::Y);
  const HomoPoly qx = q.partial(Axis::X), qy = q.partial(Axis::Y);
  return {Rational(2) * (px * qx), px * qy + py * qx, Rational(2) * (py * qy)};
}

HomoPoly bracket(const HomoPoly& p, const HomoPoly& q) {
  if (p.degree() < 2) throw DomainError("bracket needs deg p >= 2, got " + std::to_string(p.degree()));
  if (q.degree() < 1) throw DomainError("bracket needs deg q >= 1, got " + std::to_string(q.degree()));
  const HomoPoly px = p.partial(Axis::X), py = p.partial(Axis::Y);
  const HomoPoly pxx = px.partial(Axis::X), pxy = px.partial(Axis::Y), pyy = py.partial(Axis::Y);
  const HomoPoly qx = q.partial(Axis::X), qy = q.partial(Axis::Y);
  return pxx * py * qy + pyy * px * qx - pxy * (px * qy + py * qx);
}

HomoPoly hessian_determinant(const HomoPoly& p) {
  const QuadForm h = second_fundamental_form(p);
  return h.a * h.c - h.b * h.b;
}

HomoPoly jacobian_square(const HomoPoly& p, const HomoPoly& q) {
  const HomoPoly j = p.partial(Axis::X) * q.partial(Axis::Y) - p.partial(Axis::Y) * q.partial(Axis::X);
  return j * j;
}

HomoPoly discriminant_expansion_residual(const HomoPoly& p, const HomoPoly& q) {
  const QuadForm form = q * second_fundamental_form(p) + dpdq_form(p, q);
  const HomoPoly lhs = discriminant(form);
  const HomoPoly rhs = -(q * q * hessian_determinant(p)) + jacobian_square(p, q) - Rational(2) * (q * bracket(p, q));
  return lhs - rhs;
}

QuadForm leibniz_residual(const HomoPoly& p, const HomoPoly& q) {
  auto hessian_or_zero = [](const HomoPoly& h) {
    return h.degree() >= 2 ? second_fundamental_form(h) : QuadForm{HomoPoly(0), HomoPoly(0), HomoPoly(0)};
  };
  const QuadForm lhs = second_fundamental_form(p * q);
  const QuadForm rhs = p * hessian_or_zero(q) + q * hessian_or_zero(p) + dpdq_form(p, q);
  return lhs - rhs;
}

PathCoefficients path_form_coeffs(const QuadForm& omega, const QuadForm& delta) {
  PathCoefficients out{omega, delta, discriminant(omega), {}, discriminant(delta)};
  out.a1 = Rational(2) * (omega.b * delta.b) - omega.a * delta.c - omega.c * delta.a;
  return out;
}

QuadForm hopf_form(int m) {
  if (m < 2) throw DomainError("hopf_form requires m >= 2");
  const HomoPoly im = im_power(m - 2);
  return {im, re_power(m - 2), -im};
}

}  // namespace hesstop
