#include <cctype>
#include <map>
#include <optional>

#include "hesstop/errors.hpp"
#include "hesstop/homopoly.hpp"

namespace hesstop {

namespace {

constexpr int kMaxExponent = 4096;

struct Term {
  Rational coef;
  int x_power = 0;
  int y_power = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) {
    // Whitespace is insignificant; remember original offsets for messages.
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        offsets_.push_back(i);
      }
    }
    offsets_.push_back(text.size());
  }

  std::vector<Term> parse() {
    if (chars_.empty()) fail("empty polynomial");
    std::vector<Term> terms;
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = take() == '-' ? -1 : 1;
    while (true) {
      Term t = term();
      if (sign < 0) t.coef = -t.coef;
      terms.push_back(std::move(t));
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      take();
      sign = op == '-' ? -1 : 1;
    }
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, offsets_[pos_]); }

  bool at_end() const { return pos_ >= chars_.size(); }
  char peek() const { return at_end() ? '\0' : chars_[pos_]; }
  char take() { return chars_[pos_++]; }

  BigInt integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(take());
    return BigInt(digits);
  }

  int exponent() {
    if (peek() != '^') return 1;
    take();
    BigInt e = integer();
    if (e > kMaxExponent) fail("exponent too large");
    return static_cast<int>(e.get_si());
  }

  Term term() {
    Term t;
    t.coef = 1;
    bool has_coef = false;
    bool has_var = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      BigInt num = integer();
      BigInt den = 1;
      if (peek() == '/') {
        take();
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      t.coef = Rational(num, den);
      t.coef.canonicalize();
      has_coef = true;
    }
    if (has_coef && peek() == '*') {
      take();
      if (peek() != 'x' && peek() != 'y') fail("expected variable after '*'");
    }
    if (peek() == 'x') {
      take();
      t.x_power = exponent();
      has_var = true;
      if (peek() == '*') {
        take();
        if (peek() != 'y') fail("expected 'y' after '*'");
      }
    }
    if (peek() == 'y') {
      take();
      t.y_power = exponent();
      has_var = true;
    }
    if (!has_coef && !has_var) fail(at_end() ? "unexpected end of input" : std::string("unexpected '") + peek() + "'");
    return t;
  }

  std::vector<char> chars_;
  std::vector<std::size_t> offsets_;
  std::size_t pos_ = 0;
};

}  // namespace

HomoPoly parse_poly(std::string_view text) {
  const std::vector<Term> terms = Parser(text).parse();
  const int degree = terms.front().x_power + terms.front().y_power;
  for (const Term& t : terms) {
    const int d = t.x_power + t.y_power;
    if (d != degree) throw NotHomogeneous(degree, d);
  }
  HomoPoly out(degree);
  for (const Term& t : terms) out += HomoPoly::monomial(t.x_power, t.y_power, t.coef);
  return out;
}

}  // namespace hesstop
