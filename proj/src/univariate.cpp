#include "hesstop/univariate.hpp"

#include <algorithm>

#include "hesstop/errors.hpp"

namespace hesstop {

UniPoly::UniPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

int UniPoly::sign_at_infinity(int dir) const {
  if (c_.empty()) return 0;
  const int s = sgn(c_.back());
  return (dir < 0 && degree() % 2 == 1) ? -s : s;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  std::vector<Rational> out = c_;
  const Rational lead = c_.back();
  for (auto& v : out) v /= lead;
  return UniPoly(std::move(out));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(out));
}

DivMod divmod(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> r = num.coeffs();
  const int dd = den.degree();
  const Rational& lead = den.leading();
  if (num.degree() < dd) return {UniPoly(), num};
  std::vector<Rational> q(static_cast<std::size_t>(num.degree() - dd + 1), Rational(0));
  for (int i = num.degree(); i >= dd; --i) {
    const Rational factor = r[static_cast<std::size_t>(i)] / lead;
    q[static_cast<std::size_t>(i - dd)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(i - dd + j)] -= factor * den.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(dd));
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

SturmChain::SturmChain(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  seq_.push_back(p);
  UniPoly d = p.derivative();
  if (d.is_zero()) return;
  seq_.push_back(d);
  while (true) {
    UniPoly r = divmod(seq_[seq_.size() - 2], seq_.back()).remainder;
    if (r.is_zero()) break;
    seq_.push_back(-r);
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int SturmChain::variations_at(const Rational& t) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& p : seq_) signs.push_back(p.sign_at(t));
  return count_variations(signs);
}

int SturmChain::variations_at_infinity(int dir) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& p : seq_) signs.push_back(p.sign_at_infinity(dir));
  return count_variations(signs);
}

int SturmChain::count_roots(const Rational& lo, const Rational& hi) const { return variations_at(lo) - variations_at(hi); }

int SturmChain::count_real_roots() const { return variations_at_infinity(-1) - variations_at_infinity(1); }

Rational cauchy_bound(const UniPoly& p) {
  if (p.degree() < 1) return 1;
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeffs()[static_cast<std::size_t>(i)] / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

namespace {

// A non-root splitting point inside (lo, hi): the midpoint, or a nearby
// rational if the midpoint happens to be a root (p has finitely many).
Rational split_point(const UniPoly& p, const Rational& lo, const Rational& hi) {
  const Rational w = hi - lo;
  Rational mid = (lo + hi) / 2;
  for (long k = 3; p.sign_at(mid) == 0; k += 2) mid = lo + w / 2 + w / (2 * k);
  return mid;
}

void isolate(const UniPoly& p, const SturmChain& chain, const Rational& lo, const Rational& hi, int count,
             std::vector<RootInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  const Rational mid = split_point(p, lo, hi);
  const int left = chain.count_roots(lo, mid);
  isolate(p, chain, lo, mid, left, out);
  isolate(p, chain, mid, hi, count - left, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("root isolation of the zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;
  const SturmChain chain(p);
  const Rational b = cauchy_bound(p);
  isolate(p, chain, -b, b, chain.count_roots(-b, b), out);
  return out;
}

RootInterval refine_root(const UniPoly& p, const SturmChain& chain, RootInterval iv, const Rational& width) {
  while (iv.hi - iv.lo >= width) {
    const Rational mid = (iv.lo + iv.hi) / 2;
    if (p.sign_at(mid) == 0) return {mid, mid};
    if (chain.count_roots(iv.lo, mid) == 1) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
  }
  return iv;
}

}  // namespace hesstop
