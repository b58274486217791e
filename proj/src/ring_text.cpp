#include <cctype>
#include <limits>

#include "lgeo/errors.hpp"
#include "lgeo/ring.hpp"

namespace lgeo {

namespace {

// Recursive-descent parser over the raw text; whitespace is skipped between
// tokens.
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  Polynomial expr() {
    const bool negate = accept('-');
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Exponent natural_exponent() {
    skip_space();
    const std::size_t start = pos_;
    auto d = digits();
    if (d.empty()) fail("expected a natural exponent");
    BigInt e(std::string(d), 10);
    if (e > std::numeric_limits<Exponent>::max()) fail_at("exponent overflow", start);
    return static_cast<Exponent>(e.get_ui());
  }

  Polynomial factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num(std::string(digits()), 10);
      BigInt den = 1;
      if (accept('/')) {
        skip_space();
        const std::size_t at = pos_;
        auto d = digits();
        if (d.empty()) fail("expected a denominator");
        den = BigInt(std::string(d), 10);
        if (den == 0) fail_at("zero denominator", at);
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(ring_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      std::string canon;
      try {
        canon = canonical_variable_name(name);
      } catch (const InputError&) {
        fail_at("invalid variable name '" + std::string(name) + "'", start);
      }
      auto index = ring_->find(canon);
      if (!index) throw InputError("unknown variable '" + std::string(name) + "'");
      Exponent e = 1;
      if (accept('^')) e = natural_exponent();
      Monomial m(ring_->nvars());
      m.set(*index, e);
      return Polynomial::monomial(ring_, 1, std::move(m));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

void append_monomial(std::string& out, const Monomial& m, const PolyRing& ring) {
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out += '*';
    first = false;
    out += ring.names()[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  return PolynomialParser(text, ring).parse();
}

std::string print_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(t.coeff);
    if (t.mono.is_one()) {
      out += to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += to_string(magnitude) + "*";
    append_monomial(out, t.mono, *f.ring());
  }
  return out;
}

}  // namespace lgeo
