#include "smeared/polynomial.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "smeared/errors.hpp"

namespace smeared {

void require_same_ring(const PolyRing& a, const PolyRing& b) {
  if (&a == &b) return;
  if (!(a == b)) throw RingMismatch("polynomials belong to different rings");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto order = ring_->order();
  for (const auto& t : terms)
    if (t.monomial.num_vars() != ring_->num_vars())
      throw DimensionMismatch("monomial length does not match ring");
  std::sort(terms.begin(), terms.end(), [order](const Term& a, const Term& b) {
    return compare_monomials(a.monomial, b.monomial, order) > 0;
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({Monomial(ring->num_vars()), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Polynomial p(ring);
  p.terms_.push_back({Monomial::variable(ring->num_vars(), index), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Rational c) {
  if (m.num_vars() != ring->num_vars()) throw DimensionMismatch("monomial length does not match ring");
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return Rational(0);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return Rational(0);
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return *this * (Rational(1) / leading_coefficient());
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& t : terms_) {
    mpz_class den = t.coeff.denominator();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    mpz_class num = t.coeff.numerator();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
  }
  // content = gcd(numerators) / lcm(denominators)
  Rational scale(den_lcm, num_gcd);
  if (leading_coefficient().sign() < 0) scale = -scale;
  if (scale.is_one()) return *this;
  return *this * scale;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (target.get() == ring_.get()) return *this;
  if (!ring_->same_variables(*target)) throw RingMismatch("cannot move polynomial between rings with different variables");
  Polynomial p(target);
  p.terms_ = terms_;
  if (!(ring_->order() == target->order())) {
    const auto order = target->order();
    std::sort(p.terms_.begin(), p.terms_.end(), [order](const Term& a, const Term& b) {
      return compare_monomials(a.monomial, b.monomial, order) > 0;
    });
  }
  return p;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->num_vars())
    throw DimensionMismatch("point has " + std::to_string(point.size()) + " coordinates, ring has " +
                            std::to_string(ring_->num_vars()) + " variables");
  Rational sum;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (Monomial::Exponent e = 0; e < t.monomial[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (c.sign() < 0) c = -c;
    std::string mono;
    for (std::size_t i = 0; i < t.monomial.num_vars(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->variable_name(i);
      if (t.monomial[i] > 1) mono += "^" + std::to_string(t.monomial[i]);
    }
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.to_string() + "*" + mono;
    }
    first = false;
  }
  return out;
}

void Polynomial::check_ring(const Polynomial& other) const { require_same_ring(*ring_, *other.ring_); }

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && cmp(a->monomial, b->monomial) > 0)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || cmp(a->monomial, b->monomial) < 0) {
      out.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (!c.is_zero()) out.push_back({std::move(a->monomial), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  Polynomial p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::sub_scaled(const Rational& c, const Monomial& m, const Polynomial& g) const {
  check_ring(g);
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      out.push_back(*a++);
      continue;
    }
    Monomial bm = b->monomial * m;
    if (a == terms_.end() || cmp(a->monomial, bm) < 0) {
      out.push_back({std::move(bm), -(b->coeff * c)});
      ++b;
    } else if (cmp(a->monomial, bm) > 0) {
      out.push_back(*a++);
    } else {
      Rational v = a->coeff - b->coeff * c;
      if (!v.is_zero()) out.push_back({std::move(bm), std::move(v)});
      ++a;
      ++b;
    }
  }
  Polynomial p(ring_);
  p.terms_ = std::move(out);
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  const auto order = a.ring_->order();
  auto less = [order](const Monomial& x, const Monomial& y) { return compare_monomials(x, y, order) > 0; };
  std::map<Monomial, Rational, decltype(less)> acc(less);
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      auto [it, inserted] = acc.try_emplace(s.monomial * t.monomial, s.coeff * t.coeff);
      if (!inserted) it->second += s.coeff * t.coeff;
    }
  }
  Polynomial p(a.ring_);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
  return p;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::tail() const {
  Polynomial p(ring_);
  if (terms_.size() > 1) p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.ring_->same_variables(*b.ring_)) throw RingMismatch("comparing polynomials from different rings");
  if (a.ring_->order() == b.ring_->order()) return a.terms_ == b.terms_;
  return a.terms_.size() == b.terms_.size() && a == b.in_ring(a.ring_);
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace smeared
