#pragma once

// Test-only helpers: seeded random polynomials and ideals at desk scale.

#include <random>
#include <string>
#include <vector>

#include "smeared/ideal.hpp"
#include "smeared/parse.hpp"

namespace smeared::testing {

inline RingPtr ring_xy() { return PolyRing::make({"x", "y"}); }
inline RingPtr ring_xyz() { return PolyRing::make({"x", "y", "z"}); }

inline Polynomial P(const std::string& text, const RingPtr& ring) { return parse_poly(text, ring); }

inline Ideal I(const RingPtr& ring, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_poly(g, ring));
  return Ideal(ring, std::move(ps));
}

inline Rational random_rational(std::mt19937& rng, int range = 5, bool fractions = false) {
  std::uniform_int_distribution<int> num(-range, range);
  if (!fractions) return Rational(num(rng));
  std::uniform_int_distribution<int> den(1, 4);
  return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

/// Random polynomial with up to `max_terms` terms of total degree <= max_degree.
inline Polynomial random_poly(std::mt19937& rng, const RingPtr& ring, unsigned max_degree, unsigned max_terms,
                              int coeff_range = 5, bool fractions = false) {
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, ring->num_vars() - 1);
  std::vector<Term> terms;
  const unsigned k = nterms(rng);
  for (unsigned t = 0; t < k; ++t) {
    Monomial m(ring->num_vars());
    const unsigned d = deg(rng);
    for (unsigned e = 0; e < d; ++e) m[var(rng)] += 1;
    terms.push_back({m, random_rational(rng, coeff_range, fractions)});
  }
  return Polynomial(ring, std::move(terms));
}

inline Polynomial random_nonzero_poly(std::mt19937& rng, const RingPtr& ring, unsigned max_degree,
                                      unsigned max_terms) {
  for (;;) {
    Polynomial p = random_poly(rng, ring, max_degree, max_terms);
    if (!p.is_zero()) return p;
  }
}

/// Random ideal with `ngens` generators, each nonconstant of degree <= max_degree.
inline Ideal random_ideal(std::mt19937& rng, const RingPtr& ring, unsigned ngens, unsigned max_degree,
                          unsigned max_terms = 3) {
  std::vector<Polynomial> gens;
  while (gens.size() < ngens) {
    Polynomial p = random_poly(rng, ring, max_degree, max_terms, 3);
    if (!p.is_constant()) gens.push_back(p);
  }
  return Ideal(ring, std::move(gens));
}

/// Random proper ideal (resamples unit ideals).
inline Ideal random_proper_ideal(std::mt19937& rng, const RingPtr& ring, unsigned ngens, unsigned max_degree,
                                 unsigned max_terms = 3) {
  for (;;) {
    Ideal id = random_ideal(rng, ring, ngens, max_degree, max_terms);
    if (!id.is_unit()) return id;
  }
}

inline std::vector<Rational> random_point(std::mt19937& rng, std::size_t n, int range = 3) {
  std::vector<Rational> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(random_rational(rng, range));
  return p;
}

}  // namespace smeared::testing
