#include "hesstop/isotopy.hpp"

#include <algorithm>

#include "hesstop/errors.hpp"

namespace hesstop {

const char* to_string(IsotopyKind k) {
  switch (k) {
    case IsotopyKind::DirectPath:
      return "DirectPath";
    case IsotopyKind::ProductPath:
      return "ProductPath";
    case IsotopyKind::Composite:
      return "Composite";
  }
  return "?";
}

bool IsotopyCertificate::valid() const {
  auto ok = [](const Condition& c) { return c.satisfied; };
  return std::all_of(hypotheses.begin(), hypotheses.end(), ok) && std::all_of(conditions.begin(), conditions.end(), ok) &&
         std::all_of(legs.begin(), legs.end(), [](const IsotopyCertificate& l) { return l.valid(); });
}

namespace {

Condition positive(std::string name, const HomoPoly& p) {
  SignCertificate c = sign_on_punctured_plane(p);
  const bool ok = c.positive();
  return {std::move(name), ok, std::move(c)};
}

Condition nonnegative(std::string name, const HomoPoly& p) {
  SignCertificate c = sign_on_punctured_plane(p);
  const bool ok = c.nonnegative();
  return {std::move(name), ok, std::move(c)};
}

Condition nonpositive(std::string name, const HomoPoly& p) {
  SignCertificate c = sign_on_punctured_plane(p);
  const bool ok = c.nonpositive();
  return {std::move(name), ok, std::move(c)};
}

void require(const Condition& c) {
  if (!c.satisfied) throw PreconditionFailed(c.name, std::string("verdict ") + to_string(c.certificate.verdict));
}

// Independent zero-residual checks are recorded as conditions with an
// IdenticallyZero certificate of the residual.
Condition identity(std::string name, const HomoPoly& residual) {
  SignCertificate c;
  c.verdict = residual.is_zero() ? Verdict::IdenticallyZero : Verdict::Mixed;
  c.method = "exact-residual";
  return {std::move(name), residual.is_zero(), std::move(c)};
}

}  // namespace

PathSignResult path_sign_check(const HomoPoly& a0, const HomoPoly& a1, const HomoPoly& a2) {
  PathSignResult out;
  out.conditions.push_back(positive("a0 > 0", a0));
  out.conditions.push_back(positive("a0 + a1 + a2 > 0", a0 + a1 + a2));
  out.conditions.push_back(nonpositive("a2 <= 0", a2));
  out.holds = std::all_of(out.conditions.begin(), out.conditions.end(), [](const Condition& c) { return c.satisfied; });
  return out;
}

IsotopyCertificate direct_path_certify(const HomoPoly& p, const HomoPoly& q) {
  IsotopyCertificate cert;
  cert.kind = IsotopyKind::DirectPath;

  Classification hyp = is_hyperbolic(p);
  cert.hypotheses.push_back({"P hyperbolic", hyp.holds, hyp.certificate});
  require(cert.hypotheses.back());
  cert.hypotheses.push_back(positive("Q positive", q));
  require(cert.hypotheses.back());
  InequalityCertificate ineq = verify_inequality_one(p, q);
  cert.hypotheses.push_back({"bracket(P, Q) <= 0", ineq.holds, ineq.certificate});
  require(cert.hypotheses.back());

  // Psi_t = Q II_P + t (2 dP dQ).
  const PathCoefficients path = path_form_coeffs(q * second_fundamental_form(p), dpdq_form(p, q));
  cert.a0 = path.a0;
  cert.a1 = path.a1;
  cert.a2 = path.a2;
  cert.conditions.push_back(identity("a0 = -Q^2 det Hess P", path.a0 + q * q * hessian_determinant(p)));
  cert.conditions.push_back(identity("a1 = -2 Q bracket(P, Q)", path.a1 + Rational(2) * (q * ineq.bracket)));
  cert.conditions.push_back(identity("a2 = (P_x Q_y - P_y Q_x)^2", path.a2 - jacobian_square(p, q)));
  cert.conditions.push_back(positive("a0 > 0", path.a0));
  cert.conditions.push_back(nonnegative("a1 >= 0", path.a1));
  cert.conditions.push_back(nonnegative("a2 >= 0", path.a2));
  cert.branch = "a0 > 0, a1 >= 0, a2 >= 0";
  cert.conclusion = "Q II_P + 2t dP dQ is hyperbolic for all t in [0, 1]";
  return cert;
}

IsotopyCertificate product_path_certify(const HomoPoly& p, const HomoPoly& q) {
  IsotopyCertificate cert;
  cert.kind = IsotopyKind::ProductPath;
  const QuadForm omega = q * second_fundamental_form(p) + dpdq_form(p, q);
  const QuadForm delta = p * second_fundamental_form(q);
  const PathCoefficients path = path_form_coeffs(omega, delta);
  cert.a0 = path.a0;
  cert.a1 = path.a1;
  cert.a2 = path.a2;
  const HomoPoly f = p * q;
  const QuadForm sum = omega + delta;
  const QuadForm diff = sum - second_fundamental_form(f);
  cert.conditions.push_back(identity("omega + delta = II_PQ", diff.a * diff.a + diff.b * diff.b + diff.c * diff.c));
  cert.conditions.push_back(identity("a0 + a1 + a2 = Disc(II_PQ)", path.a0 + path.a1 + path.a2 - discriminant(second_fundamental_form(f))));
  cert.conditions.push_back(identity("a2 = P^2 Disc(II_Q)", path.a2 - p * p * discriminant(second_fundamental_form(q))));
  PathSignResult r8 = path_sign_check(path.a0, path.a1, path.a2);
  for (auto& c : r8.conditions) cert.conditions.push_back(std::move(c));
  cert.branch = "path signs: a0 > 0, a0 + a1 + a2 > 0, a2 <= 0";
  cert.conclusion = "omega + t delta is hyperbolic for all t in [0, 1]";
  return cert;
}

IsotopyCertificate isotopy_certify(const HomoPoly& p, const HomoPoly& q) {
  IsotopyCertificate cert;
  cert.kind = IsotopyKind::Composite;
  if (p.degree() < 2 || q.degree() < 2) {
    throw PreconditionFailed("degrees", "P and Q need degree >= 2");
  }
  const HomoPoly f = p * q;

  Classification p_hyp = is_hyperbolic(p);
  cert.hypotheses.push_back({"P hyperbolic", p_hyp.holds, p_hyp.certificate});
  require(cert.hypotheses.back());
  Classification q_ell = is_elliptic(q);
  cert.hypotheses.push_back({"Q elliptic", q_ell.holds, q_ell.certificate});
  require(cert.hypotheses.back());
  cert.hypotheses.push_back(positive("Q positive", q));
  require(cert.hypotheses.back());
  Classification f_hyp = is_hyperbolic(f);
  cert.hypotheses.push_back({"PQ hyperbolic", f_hyp.holds, f_hyp.certificate});
  require(cert.hypotheses.back());
  InequalityCertificate ineq = verify_inequality_one(p, q);
  cert.hypotheses.push_back({"bracket(P, Q) <= 0", ineq.holds, ineq.certificate});
  require(cert.hypotheses.back());

  const QuadForm leib = leibniz_residual(p, q);
  cert.conditions.push_back(identity("II_PQ = P II_Q + Q II_P + 2 dP dQ", leib.a * leib.a + leib.b * leib.b + leib.c * leib.c));
  cert.conditions.push_back(identity("Disc(Q II_P + 2 dP dQ) expansion", discriminant_expansion_residual(p, q)));

  IsotopyCertificate leg4 = product_path_certify(p, q);
  IsotopyCertificate leg3 = direct_path_certify(p, q);
  cert.a0 = leg4.a0;
  cert.a1 = leg4.a1;
  cert.a2 = leg4.a2;
  cert.legs.push_back(std::move(leg4));
  cert.legs.push_back(std::move(leg3));
  cert.branch = "II_PQ ~ Q II_P + 2 dP dQ ~ Q II_P ~ II_P";
  cert.conclusion = cert.valid() ? "II_PQ and II_P are hyperbolic isotopic; i0(II_PQ) = i0(II_P)"
                                 : "not certified";
  return cert;
}

}  // namespace hesstop
