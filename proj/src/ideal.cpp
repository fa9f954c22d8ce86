#include "smeared/ideal.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <mutex>

#include "smeared/errors.hpp"

namespace smeared {

struct Ideal::Cache {
  std::mutex mutex;
  std::vector<std::pair<MonomialOrder, std::unique_ptr<GroebnerBasis>>> bases;
  std::unique_ptr<TrackedBasis> tracked;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(*g.ring(), *ring_);
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

const GroebnerBasis& Ideal::groebner() const { return groebner(ring_->order()); }

const GroebnerBasis& Ideal::groebner(MonomialOrder order) const {
  std::lock_guard lock(cache_->mutex);
  for (const auto& [o, gb] : cache_->bases)
    if (o == order) return *gb;
  cache_->bases.emplace_back(order, std::make_unique<GroebnerBasis>(buchberger(generators_, order, ring_)));
  return *cache_->bases.back().second;
}

const TrackedBasis& Ideal::tracked() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->tracked)
    cache_->tracked = std::make_unique<TrackedBasis>(buchberger_tracked(generators_, ring_->order(), ring_));
  return *cache_->tracked;
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

std::optional<std::vector<Polynomial>> Ideal::membership_cofactors(const Polynomial& f) const {
  require_same_ring(*f.ring(), *ring_);
  return ideal_cofactors(f, tracked());
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  require_same_ring(*f.ring(), *ring_);
  return reduce(f, groebner());
}

bool Ideal::is_subset_of(const Ideal& other) const {
  return std::all_of(generators_.begin(), generators_.end(), [&](const Polynomial& g) { return other.contains(g); });
}

bool Ideal::same_as(const Ideal& other) const {
  require_same_ring(*ring_, *other.ring_);
  return groebner() == other.groebner();
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ", ";
    s += generators_[i].to_string();
  }
  return s + ")";
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

namespace {

// Moves p into `target`, placing variable i of p's ring at position var_map[i].
Polynomial remap(const Polynomial& p, const RingPtr& target, const std::vector<std::size_t>& var_map) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target->num_vars());
    for (std::size_t i = 0; i < var_map.size(); ++i) m[var_map[i]] = t.monomial[i];
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

// Inverse of remap for polynomials that avoid every variable not in the image of var_map.
Polynomial pull_back(const Polynomial& p, const RingPtr& source, const std::vector<std::size_t>& var_map) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m(source->num_vars());
    for (std::size_t i = 0; i < var_map.size(); ++i) m[i] = t.monomial[var_map[i]];
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial(source, std::move(terms));
}

std::string fresh_name(const PolyRing& ring, const std::string& stem) {
  std::string name = stem;
  while (ring.index_of(name)) name += "_";
  return name;
}

}  // namespace

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);

  // Ring (t, x_1..x_d) with t in its own elimination block.
  std::vector<std::string> names{fresh_name(*ring, "t")};
  names.insert(names.end(), ring->variable_names().begin(), ring->variable_names().end());
  const RingPtr ext = PolyRing::make(names, MonomialOrder::block_grevlex(1));
  std::vector<std::size_t> var_map(ring->num_vars());
  for (std::size_t i = 0; i < var_map.size(); ++i) var_map[i] = i + 1;

  const Polynomial t = Polynomial::variable(ext, 0);
  const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * remap(f, ext, var_map));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * remap(g, ext, var_map));

  const GroebnerBasis gb = buchberger(gens, ext->order(), ext);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements())
    if (g.leading_monomial()[0] == 0) kept.push_back(pull_back(g, ring, var_map));
  return Ideal(ring, std::move(kept));
}

Ideal ideal_intersection(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw PreconditionError("intersection of an empty family");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_intersection(acc, ideals[i]);
  return acc;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& keep_vars) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->num_vars();
  if (keep_vars.empty()) throw PreconditionError("eliminate needs a nonempty set of variables to keep");
  std::vector<bool> keep(n, false);
  for (auto v : keep_vars) {
    if (v >= n) throw PreconditionError("variable index out of range");
    keep[v] = true;
  }
  // Eliminated variables first (one block), kept ones after, relative order preserved.
  std::vector<std::size_t> var_map(n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    if (!keep[i]) {
      var_map[i] = names.size();
      names.push_back(ring->variable_name(i));
    }
  const std::size_t block = names.size();
  for (std::size_t i = 0; i < n; ++i)
    if (keep[i]) {
      var_map[i] = names.size();
      names.push_back(ring->variable_name(i));
    }
  if (block == 0) return ideal;

  const RingPtr ext = PolyRing::make(names, MonomialOrder::block_grevlex(block));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(remap(g, ext, var_map));
  const GroebnerBasis gb = buchberger(gens, ext->order(), ext);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    const auto& lm = g.leading_monomial();
    bool free_of_eliminated = true;
    for (std::size_t i = 0; i < block; ++i) free_of_eliminated = free_of_eliminated && lm[i] == 0;
    if (free_of_eliminated) kept.push_back(pull_back(g, ring, var_map));
  }
  return Ideal(ring, std::move(kept));
}

std::size_t krull_dim(const Ideal& ideal) {
  const GroebnerBasis& gb = ideal.groebner();
  if (contains_one(gb)) throw PreconditionError("Krull dimension of the zero ring (unit ideal)");
  const std::size_t n = ideal.ring()->num_vars();
  if (n > 20) throw PreconditionError("too many variables for exhaustive independent-set search");
  // Bitmask of the support of each leading monomial.
  std::vector<std::uint32_t> supports;
  for (const auto& m : gb.leading_monomials()) {
    std::uint32_t mask = 0;
    for (auto v : m.support()) mask |= 1u << v;
    supports.push_back(mask);
  }
  std::size_t best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    const auto size = static_cast<std::size_t>(std::popcount(subset));
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [subset](std::uint32_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

std::optional<std::size_t> quotient_vdim(const Ideal& ideal) {
  if (krull_dim(ideal) > 0) return std::nullopt;
  const GroebnerBasis& gb = ideal.groebner();
  const auto lms = gb.leading_monomials();
  const std::size_t n = ideal.ring()->num_vars();
  // Dimension zero: every variable has a pure power among the leading monomials, which
  // bounds the staircase by a box.
  std::vector<Monomial::Exponent> bound(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& m : lms) {
      const auto s = m.support();
      if (s.size() == 1 && s[0] == v && (bound[v] == 0 || m[v] < bound[v])) bound[v] = m[v];
    }
  }
  std::size_t count = 0;
  Monomial cur(n);
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == n) {
      if (std::none_of(lms.begin(), lms.end(), [&](const Monomial& m) { return m.divides(cur); })) ++count;
      return;
    }
    for (Monomial::Exponent e = 0; e < bound[v]; ++e) {
      cur[v] = e;
      walk(v + 1);
    }
    cur[v] = 0;
  };
  walk(0);
  return count;
}

bool is_coprime(const Ideal& a, const Ideal& b) { return ideal_sum(a, b).is_unit(); }

bool radical_member(const Polynomial& f, const Ideal& ideal) {
  require_same_ring(*f.ring(), *ideal.ring());
  const RingPtr& ring = ideal.ring();
  std::vector<std::string> names = ring->variable_names();
  names.push_back(fresh_name(*ring, "z"));
  const RingPtr ext = PolyRing::make(names, ring->order());
  std::vector<std::size_t> var_map(ring->num_vars());
  for (std::size_t i = 0; i < var_map.size(); ++i) var_map[i] = i;
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(remap(g, ext, var_map));
  const Polynomial z = Polynomial::variable(ext, ring->num_vars());
  gens.push_back(Polynomial::constant(ext, 1) - z * remap(f, ext, var_map));
  return contains_one(buchberger(gens, ext->order(), ext));
}

}  // namespace smeared
