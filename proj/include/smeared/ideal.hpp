#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "smeared/groebner.hpp"

namespace smeared {

/// Ideal of a polynomial ring given by generators. Groebner bases are computed lazily
/// and cached; copies share the cache, and concurrent reads are safe.
class Ideal {
 public:
  /// Zero generators are dropped; an empty list is the zero ideal. Throws RingMismatch if
  /// a generator lives in another ring.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(const RingPtr& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  /// Reduced basis in the ring's own order.
  const GroebnerBasis& groebner() const;
  const GroebnerBasis& groebner(MonomialOrder order) const;
  /// Basis with representation in terms of generators(), in the ring's order.
  const TrackedBasis& tracked() const;

  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const { return contains_one(groebner()); }
  bool contains(const Polynomial& f) const;
  /// Cofactors c with sum c_j * generators()[j] == f, or nullopt if f is not in the ideal.
  std::optional<std::vector<Polynomial>> membership_cofactors(const Polynomial& f) const;
  Polynomial normal_form(const Polynomial& f) const;

  bool is_subset_of(const Ideal& other) const;
  /// Same ideal (equal reduced bases).
  bool same_as(const Ideal& other) const;

  std::string to_string() const;

 private:
  struct Cache;

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// Via elimination of t from t*I + (1-t)*J.
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// Left fold of ideal_intersection. Precondition: nonempty.
Ideal ideal_intersection(const std::vector<Ideal>& ideals);

/// I ∩ Q[keep], returned as an ideal of I's ring. Throws PreconditionError on an empty or
/// out-of-range keep set.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& keep_vars);

/// Krull dimension of S/I: the largest set U of variables such that no leading monomial of
/// the reduced basis is supported inside U. Throws PreconditionError for the unit ideal.
std::size_t krull_dim(const Ideal& ideal);

/// Vector-space dimension of S/I. nullopt means infinite (exactly when krull_dim >= 1).
/// Throws PreconditionError for the unit ideal.
std::optional<std::size_t> quotient_vdim(const Ideal& ideal);

bool is_coprime(const Ideal& a, const Ideal& b);

/// f in rad(I), via 1 ∈ I + (1 - z*f) in S[z].
bool radical_member(const Polynomial& f, const Ideal& ideal);

}  // namespace smeared
