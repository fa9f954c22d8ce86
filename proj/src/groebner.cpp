#include "smeared/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <tuple>

#include "smeared/errors.hpp"

namespace smeared {

namespace {

std::atomic<std::uint64_t> g_division_checks{0};

struct Element {
  Polynomial poly;
  std::vector<Polynomial> rep;  // empty unless tracking
};

RingPtr resolve_ring(const std::vector<Polynomial>& gens, MonomialOrder order, const RingPtr& ring) {
  RingPtr base = ring;
  for (const auto& g : gens) {
    if (!base) base = g.ring();
    if (!g.ring()->same_variables(*base)) throw RingMismatch("generators belong to different rings");
  }
  if (!base) throw PreconditionError("cannot infer the ring of an empty generator list");
  return base->order() == order ? base : base->with_order(order);
}

void scale(Element& e, const Rational& c) {
  e.poly *= c;
  for (auto& r : e.rep) r *= c;
}

// h -= c * m * g, mirrored on the representation.
void sub_scaled(Element& h, const Rational& c, const Monomial& m, const Element& g) {
  h.poly = h.poly.sub_scaled(c, m, g.poly);
  for (std::size_t j = 0; j < h.rep.size(); ++j)
    if (!g.rep[j].is_zero()) h.rep[j] = h.rep[j].sub_scaled(c, m, g.rep[j]);
}

// Full reduction of h by basis (first divisor in list order wins). Entries of
// `skip` are not used as reducers.
Element reduce_full(Element h, const std::vector<Element>& basis, std::size_t skip = SIZE_MAX) {
  const RingPtr& ring = h.poly.ring();
  std::vector<Term> rest;
  Element out{Polynomial(ring), {}};
  while (!h.poly.is_zero()) {
    const Term& lt = h.poly.leading_term();
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip) continue;
      const auto& g = basis[k].poly;
      if (g.leading_monomial().divides(lt.monomial)) {
        const Rational c = lt.coeff / g.leading_coefficient();
        const Monomial m = lt.monomial / g.leading_monomial();
        sub_scaled(h, c, m, basis[k]);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rest.push_back(lt);
      h.poly = h.poly.tail();
    }
  }
  out.poly = Polynomial(ring, std::move(rest));
  out.rep = std::move(h.rep);
  return out;
}

class Buchberger {
 public:
  Buchberger(RingPtr ring, bool track, std::size_t num_gens)
      : ring_(std::move(ring)), track_(track), num_gens_(num_gens) {}

  void add_generator(const Polynomial& g, std::size_t index) {
    if (g.is_zero()) return;
    Element e{g, {}};
    if (track_) {
      e.rep.assign(num_gens_, Polynomial(ring_));
      e.rep[index] = Polynomial::constant(ring_, 1);
    }
    insert(std::move(e));
  }

  void run() {
    while (!queue_.empty()) {
      auto [deg, j, i] = *queue_.begin();
      queue_.erase(queue_.begin());
      pending_.erase({i, j});
      if (skip_pair(i, j)) continue;
      Element h = reduce_full(spoly(i, j), basis_);
      if (!h.poly.is_zero()) insert(std::move(h));
    }
  }

  // Minimalize, interreduce, make monic, sort.
  std::vector<Element> reduced_basis() {
    std::vector<Element> minimal;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const auto& lm = basis_[k].poly.leading_monomial();
      bool redundant = false;
      for (std::size_t l = 0; l < basis_.size() && !redundant; ++l) {
        if (l == k) continue;
        const auto& other = basis_[l].poly.leading_monomial();
        // Equal leading monomials: keep the earliest.
        if (other.divides(lm) && (other != lm || l < k)) redundant = true;
      }
      if (!redundant) minimal.push_back(basis_[k]);
    }
    std::vector<Element> result;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      Element e = reduce_full(minimal[k], minimal, k);
      scale(e, Rational(1) / e.poly.leading_coefficient());
      result.push_back(std::move(e));
    }
    const auto order = ring_->order();
    std::sort(result.begin(), result.end(), [order](const Element& a, const Element& b) {
      return compare_monomials(a.poly.leading_monomial(), b.poly.leading_monomial(), order) < 0;
    });
    return result;
  }

 private:
  using QueueKey = std::tuple<std::uint64_t, std::size_t, std::size_t>;

  void insert(Element e) {
    // Content removal keeps coefficient growth in check.
    const Polynomial prim = e.poly.primitive();
    if (!(prim.leading_coefficient() == e.poly.leading_coefficient()))
      scale(e, prim.leading_coefficient() / e.poly.leading_coefficient());
    const std::size_t n = basis_.size();
    basis_.push_back(std::move(e));
    const auto& lm = basis_[n].poly.leading_monomial();
    for (std::size_t i = 0; i < n; ++i) {
      queue_.insert({lcm(basis_[i].poly.leading_monomial(), lm).degree(), n, i});
      pending_.insert({i, n});
    }
  }

  bool is_pending(std::size_t a, std::size_t b) const {
    return pending_.count({std::min(a, b), std::max(a, b)}) > 0;
  }

  bool skip_pair(std::size_t i, std::size_t j) const {
    const auto& a = basis_[i].poly.leading_monomial();
    const auto& b = basis_[j].poly.leading_monomial();
    if (a.coprime_with(b)) return true;  // product criterion
    const Monomial l = lcm(a, b);
    for (std::size_t k = 0; k < basis_.size(); ++k) {  // chain criterion
      if (k == i || k == j) continue;
      if (basis_[k].poly.leading_monomial().divides(l) && !is_pending(i, k) && !is_pending(j, k)) return true;
    }
    return false;
  }

  Element spoly(std::size_t i, std::size_t j) const {
    const auto& f = basis_[i];
    const auto& g = basis_[j];
    const Monomial l = lcm(f.poly.leading_monomial(), g.poly.leading_monomial());
    Element s{Polynomial(ring_), {}};
    if (track_) s.rep.assign(num_gens_, Polynomial(ring_));
    sub_scaled(s, -(Rational(1) / f.poly.leading_coefficient()), l / f.poly.leading_monomial(), f);
    sub_scaled(s, Rational(1) / g.poly.leading_coefficient(), l / g.poly.leading_monomial(), g);
    return s;
  }

  RingPtr ring_;
  bool track_;
  std::size_t num_gens_;
  std::vector<Element> basis_;
  std::set<QueueKey> queue_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
};

std::vector<Element> run_buchberger(const std::vector<Polynomial>& gens, const RingPtr& target, bool track) {
  Buchberger bb(target, track, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) bb.add_generator(gens[j].in_ring(target), j);
  bb.run();
  return bb.reduced_basis();
}

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.leading_monomial());
  return out;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, MonomialOrder order, const RingPtr& ring) {
  const RingPtr target = resolve_ring(generators, order, ring);
  std::vector<Polynomial> elements;
  for (auto& e : run_buchberger(generators, target, false)) elements.push_back(std::move(e.poly));
  return GroebnerBasis(target, std::move(elements));
}

TrackedBasis buchberger_tracked(const std::vector<Polynomial>& generators, MonomialOrder order,
                                const RingPtr& ring) {
  const RingPtr target = resolve_ring(generators, order, ring);
  std::vector<Polynomial> elements;
  std::vector<std::vector<Polynomial>> transform;
  for (auto& e : run_buchberger(generators, target, true)) {
    elements.push_back(std::move(e.poly));
    transform.push_back(std::move(e.rep));
  }
  const RingPtr input_ring = generators.empty() ? target : generators.front().ring();
  std::vector<Polynomial> gens;
  for (const auto& g : generators) gens.push_back(g.in_ring(input_ring));
  return TrackedBasis{GroebnerBasis(target, std::move(elements)), std::move(gens), std::move(transform)};
}

namespace {

#ifdef SMEARED_CHECKED_DIVISION
constexpr bool kCheckedDivision = true;
#else
constexpr bool kCheckedDivision = false;
#endif

void verify_division(const Polynomial& f, const GroebnerBasis& gb, const DivisionResult& r) {
  Polynomial sum = r.remainder;
  for (std::size_t k = 0; k < gb.size(); ++k) {
    const Polynomial prod = r.cofactors[k] * gb.elements()[k];
    if (gb.order() == MonomialOrder::grevlex() && !prod.is_zero() && prod.total_degree() > f.total_degree())
      throw InternalError("division cofactor exceeds the degree of the dividend");
    sum += prod;
  }
  if (!(sum == f)) throw InternalError("division identity failed for " + f.to_string());
  for (const auto& t : r.remainder.terms())
    for (const auto& g : gb.elements())
      if (g.leading_monomial().divides(t.monomial))
        throw InternalError("remainder term is divisible by a leading monomial");
  g_division_checks.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

DivisionResult normal_form(const Polynomial& f, const GroebnerBasis& gb, bool with_cofactors) {
  if (!f.ring()->same_variables(*gb.ring())) throw RingMismatch("polynomial and basis belong to different rings");
  const bool track = with_cofactors || kCheckedDivision;
  const RingPtr& ring = gb.ring();
  Polynomial h = f.in_ring(ring);
  std::vector<Term> rest;
  std::vector<std::vector<Term>> quotients(track ? gb.size() : 0);
  const auto& elems = gb.elements();
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    std::size_t k = 0;
    while (k < elems.size() && !elems[k].leading_monomial().divides(lt.monomial)) ++k;
    if (k == elems.size()) {
      rest.push_back(lt);
      h = h.tail();
      continue;
    }
    const Rational c = lt.coeff / elems[k].leading_coefficient();
    const Monomial m = lt.monomial / elems[k].leading_monomial();
    if (track) quotients[k].push_back({m, c});
    h = h.sub_scaled(c, m, elems[k]);
  }
  DivisionResult result{Polynomial(ring, std::move(rest)), {}};
  for (auto& q : quotients) result.cofactors.emplace_back(ring, std::move(q));
  if constexpr (kCheckedDivision) verify_division(f.in_ring(ring), gb, result);
  if (!with_cofactors) result.cofactors.clear();
  result.remainder = result.remainder.in_ring(f.ring());
  for (auto& q : result.cofactors) q = q.in_ring(f.ring());
  return result;
}

Polynomial reduce(const Polynomial& f, const GroebnerBasis& gb) { return normal_form(f, gb).remainder; }

bool contains_one(const GroebnerBasis& gb) { return gb.is_unit_ideal(); }

std::optional<std::vector<Polynomial>> ideal_cofactors(const Polynomial& f, const TrackedBasis& tb) {
  const DivisionResult div = normal_form(f, tb.basis, true);
  if (!div.remainder.is_zero()) return std::nullopt;
  const RingPtr& out_ring = f.ring();
  std::vector<Polynomial> result(tb.generators.size(), Polynomial(out_ring));
  for (std::size_t k = 0; k < div.cofactors.size(); ++k) {
    if (div.cofactors[k].is_zero()) continue;
    const Polynomial q = div.cofactors[k].in_ring(tb.basis.ring());
    for (std::size_t j = 0; j < result.size(); ++j) {
      if (tb.transform[k][j].is_zero()) continue;
      result[j] += (q * tb.transform[k][j]).in_ring(out_ring);
    }
  }
  return result;
}

std::optional<std::vector<Polynomial>> unit_certificate(const std::vector<Polynomial>& generators, const RingPtr& ring) {
  const RingPtr base = resolve_ring(generators, MonomialOrder::grevlex(), ring);
  const TrackedBasis tb = buchberger_tracked(generators, base->order(), base);
  if (!contains_one(tb.basis)) return std::nullopt;
  const RingPtr out_ring = generators.empty() ? base : generators.front().ring();
  std::vector<Polynomial> cofactors;
  for (const auto& c : tb.transform[0]) cofactors.push_back(c.in_ring(out_ring));
  return cofactors;
}

bool division_checks_enabled() { return kCheckedDivision; }

std::uint64_t division_checks_performed() { return g_division_checks.load(std::memory_order_relaxed); }

}  // namespace smeared
