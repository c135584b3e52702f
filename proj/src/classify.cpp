#include "hesstop/classify.hpp"

#include <algorithm>
#include <vector>

#include "hesstop/errors.hpp"

namespace hesstop {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::PositiveDefinite:
      return "PositiveDefiniteOnPuncturedPlane";
    case Verdict::NegativeDefinite:
      return "NegativeDefiniteOnPuncturedPlane";
    case Verdict::Mixed:
      return "Mixed";
    case Verdict::IdenticallyZero:
      return "IdenticallyZero";
  }
  return "?";
}

const char* to_string(Semidefinite s) {
  switch (s) {
    case Semidefinite::None:
      return "none";
    case Semidefinite::NonNegative:
      return "nonnegative";
    case Semidefinite::NonPositive:
      return "nonpositive";
  }
  return "?";
}

bool SignCertificate::nonnegative() const {
  return verdict == Verdict::PositiveDefinite || verdict == Verdict::IdenticallyZero ||
         (verdict == Verdict::Mixed && semidefinite == Semidefinite::NonNegative);
}

bool SignCertificate::nonpositive() const {
  return verdict == Verdict::NegativeDefinite || verdict == Verdict::IdenticallyZero ||
         (verdict == Verdict::Mixed && semidefinite == Semidefinite::NonPositive);
}

UniPoly slice(const HomoPoly& p) {
  const auto c = p.coeffs();
  return UniPoly(std::vector<Rational>(c.begin(), c.end()));
}

namespace {

struct Sample {
  Rational x;
  Rational y;
  Rational value;
};

// A zero of u inside the isolating interval, exact when it is a "simple"
// rational (found by Stern-Brocot probing while refining).
Witness zero_witness(const UniPoly& u, const SturmChain& chain, RootInterval iv) {
  const Rational width_floor(1, BigInt(1) << 64);
  for (int step = 0; step < 64; ++step) {
    const Rational probe = simplest_between(iv.lo, iv.hi);
    if (u.sign_at(probe) == 0) return {1, probe, 0, std::nullopt};
    iv = refine_root(u, chain, iv, (iv.hi - iv.lo) / 2);
    if (iv.lo == iv.hi) return {1, iv.lo, 0, std::nullopt};
    if (iv.hi - iv.lo < width_floor) break;
  }
  const Rational mid = (iv.lo + iv.hi) / 2;
  return {1, mid, u.eval(mid), std::make_pair(iv.lo, iv.hi)};
}

}  // namespace

SignCertificate sign_on_punctured_plane(const HomoPoly& p) {
  SignCertificate cert;
  if (p.is_zero()) {
    cert.verdict = Verdict::IdenticallyZero;
    cert.method = "zero-coefficients";
    return cert;
  }
  const int d = p.degree();
  const UniPoly u = slice(p);
  // p = x^a * p~ with p~(0, 1) != 0.
  const int x_multiplicity = d - u.degree();
  const std::vector<RootInterval> roots = isolate_real_roots(u);
  cert.zero_lines = static_cast<int>(roots.size()) + (x_multiplicity > 0 ? 1 : 0);

  std::vector<Rational> ts;
  if (roots.empty()) {
    ts.push_back(u.sign_at(0) != 0 ? Rational(0) : Rational(1));
  } else {
    for (const auto& iv : roots) {
      ts.push_back(iv.lo);
      ts.push_back(iv.hi);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  }

  // p(1, t) = u(t) and p(-1, -t) = (-1)^d u(t) cover both half-planes.
  std::vector<Sample> samples;
  for (const auto& t : ts) {
    const Rational v = u.eval(t);
    samples.push_back({1, t, v});
    samples.push_back({-1, -t, (d % 2 == 0) ? v : Rational(-v)});
  }

  const int ref = sgn(samples.front().value);
  const auto opposite = std::find_if(samples.begin(), samples.end(), [&](const Sample& s) { return sgn(s.value) != ref; });
  cert.reference_sign = ref;
  if (opposite != samples.end()) {
    cert.verdict = Verdict::Mixed;
    cert.semidefinite = Semidefinite::None;
    cert.witness = Witness{opposite->x, opposite->y, opposite->value, std::nullopt};
    cert.method = d % 2 == 1 ? "odd-degree-antipodal" : "sturm-sector-sampling";
    return cert;
  }
  if (cert.zero_lines == 0) {
    cert.verdict = ref > 0 ? Verdict::PositiveDefinite : Verdict::NegativeDefinite;
    cert.method = "sturm-no-real-roots";
    return cert;
  }
  // One sign everywhere except on finitely many zero lines.
  cert.verdict = Verdict::Mixed;
  cert.semidefinite = ref > 0 ? Semidefinite::NonNegative : Semidefinite::NonPositive;
  cert.method = "sturm-semidefinite";
  if (x_multiplicity > 0) {
    cert.witness = Witness{0, 1, 0, std::nullopt};
  } else {
    cert.witness = zero_witness(u, SturmChain(u), roots.front());
  }
  return cert;
}

Classification is_hyperbolic(const HomoPoly& f) {
  if (f.degree() < 2) throw DomainError("is_hyperbolic needs degree >= 2");
  Classification out;
  out.certificate = sign_on_punctured_plane(discriminant(second_fundamental_form(f)));
  out.holds = out.certificate.positive();
  return out;
}

Classification is_elliptic(const HomoPoly& f) {
  if (f.degree() < 2) throw DomainError("is_elliptic needs degree >= 2");
  Classification out;
  out.certificate = sign_on_punctured_plane(discriminant(second_fundamental_form(f)));
  out.holds = out.certificate.negative();
  return out;
}

PolarCriterion polar_criterion_cos_family(int m, int k) {
  if (m < 2 || k < 0) {
    throw DomainError("polar criterion needs m >= 2 and k >= 0, got m=" + std::to_string(m) + " k=" + std::to_string(k));
  }
  const BigInt bm(m), bk(k);
  PolarCriterion out;
  out.max_value = 4 * bk * (bm + bk) - bm * bm * (bm + 2 * bk - 1);
  out.hyperbolic = out.max_value < 0;
  return out;
}

InequalityCertificate verify_inequality_one(const HomoPoly& p, const HomoPoly& q) {
  InequalityCertificate out;
  out.bracket = bracket(p, q);
  out.certificate = sign_on_punctured_plane(out.bracket);
  out.holds = out.certificate.nonpositive();
  return out;
}

}  // namespace hesstop
