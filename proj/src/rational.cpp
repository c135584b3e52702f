#include "hesstop/rational.hpp"

#include "hesstop/errors.hpp"

namespace hesstop {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw DomainError("not a rational: '" + s + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

BigInt binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

namespace {

// Stern-Brocot descent for the simplest rational in the open interval (lo, hi), 0 <= lo.
Rational simplest_nonnegative(Rational lo, Rational hi) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  Rational candidate(fl + 1);
  if (candidate < hi) {
    // An integer lies strictly inside; pick the smallest one above lo.
    return candidate;
  }
  // lo and hi share the integer part fl (hi may equal fl + 1).
  Rational inv_lo = hi - fl;
  Rational inv_hi = lo - fl;
  if (inv_hi == 0) {
    // Interval (fl, fl + f) with f <= 1: 1 / (n) for the smallest n with 1/n < f.
    Rational f = inv_lo;
    BigInt n;
    Rational recip = 1 / f;
    mpz_fdiv_q(n.get_mpz_t(), recip.get_num_mpz_t(), recip.get_den_mpz_t());
    Rational out = Rational(fl) + Rational(1, 1) / Rational(n + 1);
    out.canonicalize();
    return out;
  }
  Rational inner = simplest_nonnegative(1 / inv_lo, 1 / inv_hi);
  Rational out = Rational(fl) + 1 / inner;
  out.canonicalize();
  return out;
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw DomainError("simplest_between: empty interval");
  if (lo < 0 && hi > 0) return 0;
  if (hi <= 0) return -simplest_nonnegative(-hi, -lo);
  return simplest_nonnegative(lo, hi);
}

}  // namespace hesstop
