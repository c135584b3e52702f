#include "hesstop/homopoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "hesstop/errors.hpp"

namespace hesstop {

HomoPoly::HomoPoly(int degree) : degree_(degree) {
  if (degree < 0) throw DomainError("negative degree " + std::to_string(degree));
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
}

HomoPoly::HomoPoly(int degree, std::vector<Rational> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0) throw DomainError("negative degree " + std::to_string(degree));
  if (coeffs_.size() != static_cast<std::size_t>(degree) + 1) {
    throw DomainError("degree " + std::to_string(degree) + " needs " + std::to_string(degree + 1) +
                      " coefficients, got " + std::to_string(coeffs_.size()));
  }
  for (auto& c : coeffs_) c.canonicalize();
}

HomoPoly HomoPoly::constant(const Rational& c) { return HomoPoly(0, {c}); }

HomoPoly HomoPoly::monomial(int x_power, int y_power, const Rational& c) {
  if (x_power < 0 || y_power < 0) throw DomainError("negative exponent");
  HomoPoly p(x_power + y_power);
  p.coeffs_[static_cast<std::size_t>(y_power)] = c;
  return p;
}

bool HomoPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Rational HomoPoly::eval(const Rational& x, const Rational& y) const {
  // ((c0 x + c1 y) x + c2 y^2) x + ...
  Rational acc = coeffs_[0];
  Rational ypow = 1;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    ypow *= y;
    acc = acc * x + coeffs_[j] * ypow;
  }
  return acc;
}

double HomoPoly::eval(double x, double y) const {
  double acc = coeffs_[0].get_d();
  double ypow = 1.0;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    ypow *= y;
    acc = acc * x + coeffs_[j].get_d() * ypow;
  }
  return acc;
}

HomoPoly HomoPoly::partial(Axis axis) const {
  if (degree_ == 0) return HomoPoly(0);
  HomoPoly out(degree_ - 1);
  for (int j = 0; j <= degree_; ++j) {
    const Rational& c = coeffs_[static_cast<std::size_t>(j)];
    if (axis == Axis::X) {
      // x^(d-j) y^j -> (d-j) x^(d-j-1) y^j
      if (j < degree_) out.coeffs_[static_cast<std::size_t>(j)] = c * (degree_ - j);
    } else if (j > 0) {
      out.coeffs_[static_cast<std::size_t>(j - 1)] = c * j;
    }
  }
  return out;
}

HomoPoly HomoPoly::pow(unsigned exponent) const {
  HomoPoly result = HomoPoly::constant(1);
  HomoPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

HomoPoly HomoPoly::swapped() const {
  std::vector<Rational> c(coeffs_.rbegin(), coeffs_.rend());
  return HomoPoly(degree_, std::move(c));
}

std::vector<double> HomoPoly::coeffs_double() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_d());
  return out;
}

namespace {

void append_monomial(std::ostringstream& os, int xp, int yp) {
  bool first = true;
  auto put = [&](char var, int e) {
    if (e == 0) return;
    if (!first) os << '*';
    os << var;
    if (e > 1) os << '^' << e;
    first = false;
  };
  put('x', xp);
  put('y', yp);
}

std::string abs_coef_text(const Rational& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

}  // namespace

std::string HomoPoly::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (int j = 0; j <= degree_; ++j) {
    const Rational& c = coeffs_[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    Rational a = abs(c);
    if (!any) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const int xp = degree_ - j;
    const int yp = j;
    const bool has_vars = degree_ > 0;
    if (!has_vars) {
      os << abs_coef_text(a);
    } else {
      if (a != 1) os << abs_coef_text(a) << '*';
      append_monomial(os, xp, yp);
    }
    any = true;
  }
  if (!any) return "0";
  return os.str();
}

HomoPoly HomoPoly::operator-() const {
  HomoPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

HomoPoly& HomoPoly::operator+=(const HomoPoly& other) {
  if (degree_ != other.degree_) {
    if (other.is_zero()) return *this;
    if (!is_zero()) throw DegreeMismatch(degree_, other.degree_);
    *this = other;
    return *this;
  }
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

HomoPoly& HomoPoly::operator-=(const HomoPoly& other) { return *this += -other; }

HomoPoly& HomoPoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

HomoPoly operator*(const HomoPoly& lhs, const HomoPoly& rhs) {
  HomoPoly out(lhs.degree_ + rhs.degree_);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

bool operator==(const HomoPoly& lhs, const HomoPoly& rhs) {
  const bool lz = lhs.is_zero();
  const bool rz = rhs.is_zero();
  if (lz || rz) return lz && rz;
  return lhs.degree_ == rhs.degree_ && lhs.coeffs_ == rhs.coeffs_;
}

std::ostream& operator<<(std::ostream& os, const HomoPoly& p) { return os << p.to_string(); }

HomoPoly partial(const HomoPoly& p, Axis axis) { return p.partial(axis); }
HomoPoly multiply(const HomoPoly& p, const HomoPoly& q) { return p * q; }
Rational eval(const HomoPoly& p, const Rational& x, const Rational& y) { return p.eval(x, y); }

HomoPoly re_power(int k) {
  if (k < 0) throw DomainError("re_power: negative exponent");
  HomoPoly out(k);
  for (int i = 0; 2 * i <= k; ++i) {
    BigInt c = binomial(k, 2 * i);
    out += HomoPoly::monomial(k - 2 * i, 2 * i, Rational(i % 2 == 0 ? c : BigInt(-c)));
  }
  return out;
}

HomoPoly im_power(int k) {
  if (k < 0) throw DomainError("im_power: negative exponent");
  HomoPoly out(k);
  for (int i = 0; 2 * i + 1 <= k; ++i) {
    BigInt c = binomial(k, 2 * i + 1);
    out += HomoPoly::monomial(k - 2 * i - 1, 2 * i + 1, Rational(i % 2 == 0 ? c : BigInt(-c)));
  }
  return out;
}

HomoPoly family_P(int m) {
  if (m < 2) throw DomainError("family_P requires m >= 2, got " + std::to_string(m));
  return re_power(m);
}

HomoPoly family_Q(int k) {
  if (k < 0) throw DomainError("family_Q requires k >= 0, got " + std::to_string(k));
  HomoPoly out(2 * k);
  for (int i = 0; i <= k; ++i) out += HomoPoly::monomial(2 * (k - i), 2 * i, Rational(binomial(k, i)));
  return out;
}

HomoPoly family_f(int m, int k) { return family_P(m) * family_Q(k); }

}  // namespace hesstop
