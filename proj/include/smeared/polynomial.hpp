#pragma once

#include <span>
#include <string>
#include <vector>

#include "smeared/monomial.hpp"
#include "smeared/poly_ring.hpp"
#include "smeared/rational.hpp"

namespace smeared {

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of Q[x_1..x_d]. Terms are stored strictly decreasing in the ring's order
/// with nonzero coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Canonicalizes: sorts, merges duplicate monomials and drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial m, Rational c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// Coefficient of the monomial 1.
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  /// Precondition: nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coefficient() const { return terms_.front().coeff; }
  std::uint64_t total_degree() const;

  /// Scaled so the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;
  /// Scaled to integer coefficients with gcd 1 and positive leading coefficient.
  Polynomial primitive() const;

  /// Same polynomial re-homed to a ring with the same variables (re-sorted if the order differs).
  Polynomial in_ring(const RingPtr& target) const;

  /// Throws DimensionMismatch if the point length differs from the number of variables.
  Rational evaluate(std::span<const Rational> point) const;

  /// Terms in ring order, e.g. "x^2*y - 3/2*x + 1"; "0" for zero. Re-parseable.
  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  /// this - c * m * g, in one merge pass.
  Polynomial sub_scaled(const Rational& c, const Monomial& m, const Polynomial& g) const;
  Polynomial mul_term(const Rational& c, const Monomial& m) const;
  Polynomial pow(unsigned exponent) const;
  /// All terms but the leading one.
  Polynomial tail() const;

  /// Equal terms; rings must share variables (throws RingMismatch otherwise).
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::strong_ordering cmp(const Monomial& a, const Monomial& b) const {
    return compare_monomials(a, b, ring_->order());
  }
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Throws RingMismatch unless the rings share variables and order.
void require_same_ring(const PolyRing& a, const PolyRing& b);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace smeared
