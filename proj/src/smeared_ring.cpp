#include "smeared/smeared_ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "smeared/linalg.hpp"

namespace smeared {

namespace {

std::string one_based(std::size_t i) { return std::to_string(i + 1); }

Polynomial derivative(const Polynomial& p, std::size_t var) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    if (t.monomial[var] == 0) continue;
    Monomial m = t.monomial;
    const auto e = m[var];
    m[var] = e - 1;
    terms.push_back({std::move(m), t.coeff * Rational(static_cast<long>(e))});
  }
  return Polynomial(p.ring(), std::move(terms));
}

// Squarefree part of a polynomial in the single variable `var`: p / gcd(p, p').
Polynomial squarefree_univariate(const Polynomial& p, std::size_t var) {
  const GroebnerBasis g = buchberger({p, derivative(p, var)}, p.ring()->order(), p.ring());
  if (g.is_zero_ideal()) return p;
  const DivisionResult div = normal_form(p, g, true);
  return div.cofactors.front().monic();
}

std::vector<Polynomial> radical_probes(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  std::vector<Polynomial> probes;
  for (const auto& m : monomials_up_to(*ring, 2))
    if (!m.is_one()) probes.push_back(Polynomial::monomial(ring, m));
  for (std::size_t v = 0; v < ring->num_vars(); ++v) {
    const Ideal elim = eliminate(ideal, {v});
    if (elim.is_zero()) continue;
    const auto& gens = elim.groebner().elements();
    if (gens.size() == 1 && !gens[0].is_constant()) probes.push_back(squarefree_univariate(gens[0], v));
  }
  return probes;
}

}  // namespace

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::EmptyFamily: return "empty_family";
    case Violation::Kind::WrongRing: return "wrong_ring";
    case Violation::Kind::Zero: return "zero";
    case Violation::Kind::NotProper: return "not_proper";
    case Violation::Kind::Maximal: return "maximal";
    case Violation::Kind::NotCoprime: return "not_coprime";
    case Violation::Kind::NotRadical: return "not_radical";
  }
  return "unknown";
}

std::string ValidationReport::to_string() const {
  if (violations.empty()) return "valid";
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v.message;
  }
  return s;
}

ValidationReport validate(const SmearedRingConfig& config, bool spot_check_radical) {
  ValidationReport report;
  auto add = [&](Violation::Kind kind, std::vector<std::size_t> ids, std::string msg) {
    report.violations.push_back({kind, std::move(ids), std::move(msg)});
  };
  if (config.ideals.empty()) {
    add(Violation::Kind::EmptyFamily, {}, "no ideals given");
    return report;
  }
  const std::size_t n = config.ideals.size();
  std::vector<bool> usable(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    const Ideal& I = config.ideals[i];
    if (!config.ring || !(*I.ring() == *config.ring)) {
      add(Violation::Kind::WrongRing, {i}, "ideal " + one_based(i) + " is not in the ambient ring");
      usable[i] = false;
      continue;
    }
    if (I.is_zero()) {
      add(Violation::Kind::Zero, {i}, "zero ideal: " + one_based(i));
      usable[i] = false;
    } else if (I.is_unit()) {
      add(Violation::Kind::NotProper, {i}, "not proper (unit ideal): " + one_based(i));
      usable[i] = false;
    } else if (quotient_vdim(I) == std::optional<std::size_t>(1)) {
      add(Violation::Kind::Maximal, {i},
          "maximal (quotient dimension 1): " + one_based(i) +
              "; Q + I is then all of S, so the ideal can simply be dropped");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!usable[i] || !usable[j]) continue;
      if (!is_coprime(config.ideals[i], config.ideals[j]))
        add(Violation::Kind::NotCoprime, {i, j}, "not coprime: pair (" + one_based(i) + "," + one_based(j) + ")");
    }
  }
  if (spot_check_radical) {
    for (std::size_t i = 0; i < n; ++i) {
      const bool asserted = i < config.radical_asserted.size() && config.radical_asserted[i];
      if (!asserted || !usable[i]) continue;
      const Ideal& I = config.ideals[i];
      for (const auto& p : radical_probes(I)) {
        if (radical_member(p, I) && !I.contains(p)) {
          add(Violation::Kind::NotRadical, {i},
              "not radical: " + one_based(i) + " (" + p.to_string() + " is in the radical but not the ideal)");
          break;
        }
      }
    }
  }
  return report;
}

std::vector<Monomial> monomials_up_to(const PolyRing& ring, std::size_t degree) {
  const std::size_t n = ring.num_vars();
  std::vector<Monomial> out;
  Monomial cur(n);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t v, std::size_t left) {
    if (v == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t e = 0; e <= left; ++e) {
      cur[v] = static_cast<Monomial::Exponent>(e);
      walk(v + 1, left - e);
    }
    cur[v] = 0;
  };
  walk(0, degree);
  const auto order = ring.order();
  std::sort(out.begin(), out.end(),
            [order](const Monomial& a, const Monomial& b) { return compare_monomials(a, b, order) > 0; });
  return out;
}

PowerSpan power_span(const Ideal& ideal, const Polynomial& h, std::size_t length) {
  PowerSpan result;
  PolynomialSpan span;
  Polynomial power = ideal.normal_form(Polynomial::constant(ideal.ring(), 1));
  for (std::size_t j = 0; j <= length; ++j) {
    if (j > 0) power = ideal.normal_form(power * h);
    const bool grew = span.add(power);
    if (!grew && !result.first_dependent_step) result.first_dependent_step = j;
    result.normal_forms.push_back(power);
  }
  return result;
}

namespace {

// ideal ∩ Q[h] == 0, tested by eliminating everything but a new variable u from I + (u - h).
bool zero_contraction(const Ideal& ideal, const Polynomial& h) {
  const RingPtr& ring = ideal.ring();
  std::vector<std::string> names = ring->variable_names();
  std::string u = "u";
  while (ring->index_of(u)) u += "_";
  names.push_back(u);
  const RingPtr ext = PolyRing::make(names, ring->order());
  auto lift = [&](const Polynomial& p) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
      std::vector<Monomial::Exponent> e(t.monomial.exponents().begin(), t.monomial.exponents().end());
      e.push_back(0);
      terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial(ext, std::move(terms));
  };
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(lift(g));
  gens.push_back(Polynomial::variable(ext, ring->num_vars()) - lift(h));
  return eliminate(Ideal(ext, std::move(gens)), {ring->num_vars()}).is_zero();
}

}  // namespace

std::optional<Polynomial> select_chain_element(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  for (std::size_t v = 0; v < ring->num_vars(); ++v)
    if (eliminate(ideal, {v}).is_zero()) return Polynomial::variable(ring, v);
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Polynomial h(ring);
    for (std::size_t v = 0; v < ring->num_vars(); ++v)
      h += Polynomial::variable(ring, v) * Rational(coeff(rng));
    if (h.is_zero()) continue;
    if (zero_contraction(ideal, h)) return h;
  }
  return std::nullopt;
}

ChainWitness chain_witness(const Ideal& ideal, std::size_t length, std::size_t index) {
  if (ideal.is_zero()) throw HypothesisFailure("chain witness needs a nonzero ideal");
  if (krull_dim(ideal) == 0)
    throw HypothesisFailure("dim S/I = 0: Q + I is noetherian and no strict chain exists");
  auto h = select_chain_element(ideal);
  if (!h) throw HypothesisFailure("no element h with I ∩ Q[h] = 0 found within the attempt bound");
  PowerSpan ps = power_span(ideal, *h, length);
  if (ps.first_dependent_step)
    throw InternalError("chain step " + std::to_string(*ps.first_dependent_step) + " is not strict");
  return ChainWitness{index, ideal.generators().front(), *h, length, std::move(ps.normal_forms)};
}

SmearedRing::SmearedRing(SmearedRingConfig config) : config_(std::move(config)) {
  ValidationReport report = validate(config_);
  if (!report.ok()) throw ValidationFailed(std::move(report));
  config_.radical_asserted.resize(config_.ideals.size(), false);
}

void SmearedRing::check_index(std::size_t i) const {
  if (i >= num_ideals())
    throw PreconditionError("ideal index " + std::to_string(i) + " out of range (have " +
                            std::to_string(num_ideals()) + ")");
}

void SmearedRing::check_ring(const Polynomial& f) const { require_same_ring(*f.ring(), *config_.ring); }

const Ideal& SmearedRing::ideal(std::size_t i) const {
  check_index(i);
  return config_.ideals[i];
}

MembershipCertificate SmearedRing::member(const Polynomial& f) const {
  check_ring(f);
  MembershipCertificate cert;
  for (std::size_t i = 0; i < num_ideals(); ++i) {
    Polynomial r = config_.ideals[i].normal_form(f);
    if (!r.is_constant()) {
      cert.member = false;
      cert.constants.clear();
      cert.witness_index = i;
      cert.nonconstant_remainder = std::move(r);
      return cert;
    }
    cert.constants.push_back(r.constant_term());
  }
  cert.member = true;
  return cert;
}

Rational SmearedRing::evaluate_at_smeared_point(const Polynomial& f, std::size_t i) const {
  check_index(i);
  const MembershipCertificate cert = member(f);
  if (!cert.member) throw NotMember(f.to_string() + " is not an element of R");
  return cert.constants[i];
}

PartitionWitness SmearedRing::partition_of_unity(std::size_t i) const {
  check_index(i);
  if (num_ideals() < 2) throw PreconditionError("partition of unity needs at least two ideals");
  const RingPtr& ring = config_.ring;
  std::vector<Ideal> others;
  for (std::size_t j = 0; j < num_ideals(); ++j)
    if (j != i) others.push_back(config_.ideals[j]);
  const Ideal J = ideal_intersection(others);
  const Ideal& Ii = config_.ideals[i];

  // 1 = sum c_k * (generators of I_i, then of J); the J part is b.
  std::vector<Polynomial> gens = Ii.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  const auto cert = unit_certificate(gens, ring);
  if (!cert) throw InternalError("ideal " + one_based(i) + " is not coprime to the intersection of the others");
  Polynomial b(ring);
  for (std::size_t k = Ii.generators().size(); k < gens.size(); ++k) b += (*cert)[k] * gens[k];
  // Shifting b by elements of I_i ∩ J keeps both memberships; the normal form is the
  // canonical shortest choice.
  b = ideal_intersection(Ii, J).normal_form(b);
  Polynomial a = Polynomial::constant(ring, 1) - b;

  PartitionWitness w{i, a, b, member(a), member(b)};
  bool ok = (w.a + w.b == Polynomial::constant(ring, 1)) && Ii.contains(w.a) && !Ii.contains(w.b);
  for (std::size_t j = 0; j < num_ideals() && ok; ++j)
    if (j != i) ok = config_.ideals[j].contains(w.b) && !config_.ideals[j].contains(w.a);
  ok = ok && w.a_membership.member && w.b_membership.member;
  if (!ok) throw InternalError("partition of unity failed verification for ideal " + one_based(i));
  return w;
}

std::vector<std::size_t> SmearedRing::dims() const {
  std::vector<std::size_t> d;
  for (const auto& I : config_.ideals) d.push_back(krull_dim(I));
  return d;
}

Verdicts SmearedRing::verdicts() const {
  Verdicts v;
  v.per_ideal_dims = dims();
  v.gdim_lower_bounds = v.per_ideal_dims;
  v.noetherian = std::all_of(v.per_ideal_dims.begin(), v.per_ideal_dims.end(), [](std::size_t d) { return d == 0; });
  v.depicted_by_S = std::all_of(v.per_ideal_dims.begin(), v.per_ideal_dims.end(), [](std::size_t d) { return d >= 1; });
  v.radicality_asserted = std::all_of(config_.radical_asserted.begin(), config_.radical_asserted.end(),
                                      [](bool b) { return b; });
  return v;
}

LocusResult SmearedRing::locus_member(const std::vector<Rational>& point) const {
  if (point.size() != ring()->num_vars())
    throw DimensionMismatch("point has " + std::to_string(point.size()) + " coordinates, ring has " +
                            std::to_string(ring()->num_vars()) + " variables");
  LocusResult result{true, {}};
  for (std::size_t i = 0; i < num_ideals(); ++i) {
    LocusEvidence ev{i, std::nullopt, Rational(0)};
    const auto& gens = config_.ideals[i].generators();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Rational val = gens[k].evaluate(point);
      if (!val.is_zero()) {
        ev.nonvanishing_generator = k;
        ev.value = std::move(val);
        break;
      }
    }
    if (!ev.nonvanishing_generator) result.in_locus = false;
    result.evidence.push_back(std::move(ev));
  }
  return result;
}

ChainWitness SmearedRing::chain_witness(std::size_t i, std::size_t length) const {
  check_index(i);
  return smeared::chain_witness(config_.ideals[i], length, i);
}

std::vector<Polynomial> SmearedRing::r_basis(std::size_t degree) const {
  const RingPtr& ring = config_.ring;
  const std::vector<Monomial> cols = monomials_up_to(*ring, degree);
  // Normal forms of every column monomial modulo every ideal.
  std::vector<std::vector<Polynomial>> nfs(num_ideals());
  std::vector<std::map<Monomial, std::size_t, std::function<bool(const Monomial&, const Monomial&)>>> row_index;
  const auto order = ring->order();
  auto desc = [order](const Monomial& a, const Monomial& b) { return compare_monomials(a, b, order) > 0; };
  std::size_t rows = 0;
  for (std::size_t i = 0; i < num_ideals(); ++i) {
    row_index.emplace_back(desc);
    for (const auto& m : cols) {
      nfs[i].push_back(config_.ideals[i].normal_form(Polynomial::monomial(ring, m)));
      for (const auto& t : nfs[i].back().terms())
        if (!t.monomial.is_one()) row_index[i].try_emplace(t.monomial, 0);
    }
    for (auto& [m, r] : row_index[i]) r = rows++;
  }
  // Constraint: the nonconstant part of NF(f, I_i) vanishes, for every i.
  RationalMatrix A(rows, cols.size());
  for (std::size_t i = 0; i < num_ideals(); ++i)
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const auto& t : nfs[i][c].terms())
        if (!t.monomial.is_one()) A(row_index[i].at(t.monomial), c) = t.coeff;

  std::vector<Polynomial> basis;
  for (const auto& v : A.nullspace()) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (!v[c].is_zero()) terms.push_back({cols[c], v[c]});
    basis.emplace_back(ring, std::move(terms));
  }
  return basis;
}

ConstancyReport SmearedRing::smeared_constancy_check(const Polynomial& f, std::size_t i,
                                                     const std::vector<std::vector<Rational>>& points) const {
  check_index(i);
  check_ring(f);
  const auto& gens = config_.ideals[i].generators();
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (const auto& g : gens)
      if (!g.evaluate(points[p]).is_zero())
        throw PreconditionError("point " + std::to_string(p + 1) + " is not on Z(I_" + one_based(i) + ")");
  }
  const Rational alpha = evaluate_at_smeared_point(f, i);
  ConstancyReport report{i, alpha, {}, {}};
  for (std::size_t p = 0; p < points.size(); ++p) {
    report.values.push_back(f.evaluate(points[p]));
    if (!(report.values.back() == alpha)) report.mismatches.push_back(p);
  }
  return report;
}

}  // namespace smeared
