#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "smeared/polynomial.hpp"

namespace smeared {

/// Reduced Groebner basis: monic elements, no term of any element divisible by another
/// element's leading monomial, sorted by increasing leading monomial. Empty means the
/// zero ideal; {1} means the unit ideal.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}

  const RingPtr& ring() const { return ring_; }
  MonomialOrder order() const { return ring_->order(); }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  bool is_zero_ideal() const { return elements_.empty(); }
  bool is_unit_ideal() const { return elements_.size() == 1 && elements_[0].is_constant(); }
  std::vector<Monomial> leading_monomials() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.ring_->same_variables(*b.ring_) && a.order() == b.order() && a.elements_ == b.elements_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
};

/// A basis together with how each element is expressed in the input generators:
/// basis.elements()[k] == sum_j transform[k][j] * generators[j].
struct TrackedBasis {
  GroebnerBasis basis;
  std::vector<Polynomial> generators;
  std::vector<std::vector<Polynomial>> transform;
};

/// Reduced Groebner basis of the ideal generated by `generators` under `order`.
/// Generators must share variables (RingMismatch otherwise); zero generators are ignored.
/// `ring` is only used when `generators` is empty.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, MonomialOrder order,
                         const RingPtr& ring = nullptr);

/// As buchberger(), also tracking the representation of each basis element. Zero
/// generators are kept in `generators` (with zero cofactors) so indices line up.
TrackedBasis buchberger_tracked(const std::vector<Polynomial>& generators, MonomialOrder order,
                                const RingPtr& ring = nullptr);

struct DivisionResult {
  Polynomial remainder;
  /// One per basis element; empty when cofactors were not requested.
  std::vector<Polynomial> cofactors;
};

/// Full multivariate division of f by the basis. Reduces by the first element (in basis
/// order) whose leading monomial divides the current term. The remainder is returned in
/// f's ring. f must share variables with the basis ring.
DivisionResult normal_form(const Polynomial& f, const GroebnerBasis& gb, bool with_cofactors = false);

/// Remainder only.
Polynomial reduce(const Polynomial& f, const GroebnerBasis& gb);

bool contains_one(const GroebnerBasis& gb);

/// Cofactors c_j with sum_j c_j * generators[j] == 1, or nullopt if the ideal is proper.
std::optional<std::vector<Polynomial>> unit_certificate(const std::vector<Polynomial>& generators,
                                                        const RingPtr& ring = nullptr);

/// Cofactors expressing f in the input generators of a tracked basis; nullopt if f is
/// not in the ideal.
std::optional<std::vector<Polynomial>> ideal_cofactors(const Polynomial& f, const TrackedBasis& tb);

/// True iff every division performed by this build verifies its identity (compile-time
/// option SMEARED_CHECKED_DIVISION).
bool division_checks_enabled();
/// Number of divisions verified so far in this process.
std::uint64_t division_checks_performed();

}  // namespace smeared
