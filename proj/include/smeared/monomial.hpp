#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace smeared {

/// Dense exponent vector. Length is fixed by the owning ring.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  static Monomial variable(std::size_t num_vars, std::size_t index, Exponent power = 1);

  std::size_t num_vars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;
  /// True iff no variable occurs in both.
  bool coprime_with(const Monomial& other) const;
  /// Indices of variables with nonzero exponent.
  std::vector<std::size_t> support() const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires `other.divides(*this)`.
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

 private:
  std::vector<Exponent> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// Monomial order. Variable precedence is the ring's variable order.
///
/// `Block(k)` compares the first k variables by grevlex, breaking ties by grevlex on
/// the remaining ones; it is an elimination order for the first block.
struct MonomialOrder {
  enum class Kind { Lex, GrevLex, Block };

  Kind kind = Kind::GrevLex;
  std::size_t block = 0;

  static constexpr MonomialOrder lex() { return {Kind::Lex, 0}; }
  static constexpr MonomialOrder grevlex() { return {Kind::GrevLex, 0}; }
  static constexpr MonomialOrder block_grevlex(std::size_t k) { return {Kind::Block, k}; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Throws DimensionMismatch on length mismatch.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder order);

}  // namespace smeared

template <>
struct std::hash<smeared::Monomial> {
  std::size_t operator()(const smeared::Monomial& m) const { return m.hash(); }
};
