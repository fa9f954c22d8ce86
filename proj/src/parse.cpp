#include "smeared/parse.hpp"

#include <cctype>
#include <limits>

#include "smeared/errors.hpp"

namespace smeared {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail_unexpected();
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void fail_unexpected() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = text_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(')
      throw ParseError(pos_, "implicit multiplication is not allowed; use '*'");
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  Polynomial expr() {
    bool negate = false;
    char c = peek();
    if (c == '-' || c == '+') {
      negate = c == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Polynomial t = term();
      if (c == '+') {
        acc += t;
      } else {
        acc -= t;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      unsigned long long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned>(text_[pos_] - '0');
        if (e > std::numeric_limits<Monomial::Exponent>::max())
          throw ParseError(start, "exponent too large");
        ++pos_;
      }
      if (pos_ == start) throw ParseError(start, "expected a non-negative integer exponent");
      b = b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  Polynomial base() {
    char c = peek();
    if (c == '(') {
      std::size_t open = pos_++;
      Polynomial inner = expr();
      if (peek() != ')') {
        if (pos_ >= text_.size()) throw ParseError(open, "unbalanced '('");
        fail_unexpected();
      }
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ring_, rational());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) throw ParseError(start, "unknown variable '" + name + "'");
      return Polynomial::variable(ring_, *idx);
    }
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  Rational rational() {
    std::size_t start = pos_;
    auto digits = [&] {
      std::size_t s = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ > s;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      if (!digits()) throw ParseError(pos_, "expected denominator digits");
    }
    try {
      return Rational::from_string(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), "invalid rational literal");
    }
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

}  // namespace smeared
