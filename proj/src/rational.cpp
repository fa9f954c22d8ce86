#include "smeared/rational.hpp"

#include <cctype>

#include "smeared/errors.hpp"

namespace smeared {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::from_string(std::string_view text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == start) throw ParseError(start, "expected digits in rational '" + std::string(text) + "'");
    return j;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t num_end = digits(i);
  std::string num_text(text.substr(0, num_end));
  if (num_text.front() == '+') num_text.erase(0, 1);
  mpz_class num(num_text, 10);
  mpz_class den = 1;
  if (num_end < text.size()) {
    if (text[num_end] != '/') throw ParseError(num_end, "unexpected character in rational");
    std::size_t den_end = digits(num_end + 1);
    if (den_end != text.size()) throw ParseError(den_end, "trailing characters in rational");
    den = mpz_class(std::string(text.substr(num_end + 1, den_end - num_end - 1)), 10);
    if (den == 0) throw ParseError(num_end + 1, "zero denominator");
  }
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PreconditionError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::size_t Rational::hash() const {
  std::size_t h = mpz_get_ui(value_.get_num_mpz_t()) * 0x9e3779b97f4a7c15ULL;
  h ^= mpz_get_ui(value_.get_den_mpz_t()) + 0x7f4a7c15ULL + (h << 6) + (h >> 2);
  return h ^ static_cast<std::size_t>(sgn(value_) + 1);
}

}  // namespace smeared
