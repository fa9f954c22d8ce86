// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "oracle/oracle.hpp"
#include "smeared/errors.hpp"
#include "smeared/smeared_ring.hpp"
#include "support.hpp"

using namespace smeared;
using namespace smeared::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects failed expectations for one criterion.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ |= !ok;
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : ", ") + text; }

  bool failed() const { return failed_; }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::string& notes() const { return notes_; }

 private:
  bool failed_ = false;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

SmearedRingConfig config_of(const RingPtr& R, std::vector<Ideal> ideals) {
  std::vector<bool> radical(ideals.size(), true);
  return {R, std::move(ideals), radical};
}

SmearedRing three_lines() {
  auto R = ring_xy();
  return SmearedRing(config_of(R, {I(R, {"x"}), I(R, {"x - 1"}), I(R, {"x - 2"})}));
}

std::vector<Rational> Q(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::string str(const Polynomial& p) { return p.to_string(); }

void criterion_1(Criterion& c) {
  const auto start = Clock::now();
  auto R = ring_xy();
  auto cfg = config_of(R, {I(R, {"x"}), I(R, {"x - 1"}), I(R, {"x - 2"})});
  c.expect(validate(cfg, true).ok(), "validate reports no violation");
  SmearedRing sr(cfg);
  auto v = sr.verdicts();
  c.expect(!v.noetherian, "nonnoetherian");
  c.expect(v.depicted_by_S, "depicted by S");
  c.expect(v.per_ideal_dims == std::vector<std::size_t>{1, 1, 1}, "dims = [1,1,1]");
  const double t = seconds_since(start);
  c.expect(t < 1.0, "runtime < 1 s");
  std::ostringstream os;
  os << "runtime " << t << " s";
  c.note(os.str());
}

void criterion_2(Criterion& c) {
  auto sr = three_lines();
  auto R = sr.ring();
  auto mx = sr.member(P("x", R));
  c.expect(mx.member && mx.constants == Q({0, 1, 2}), "x in R with alpha (0,1,2)");
  c.expect(!sr.member(P("y", R)).member, "y not in R");

  std::mt19937 rng(1001);
  const auto cubic = P("x*(x - 1)*(x - 2)", R);
  for (int t = 0; t < 25; ++t) {
    auto f = random_poly(rng, R, 3, 5, 5, true);
    auto m = sr.member(cubic * f);
    c.expect(m.member && m.constants == Q({0, 0, 0}), "x(x-1)(x-2)*f has alpha 0 for f = " + str(f));
  }

  auto basis = sr.r_basis(5);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  auto element = [&] {
    return basis[pick(rng)] * random_rational(rng, 4, true) + basis[pick(rng)] * random_rational(rng, 4, true);
  };
  for (int t = 0; t < 100; ++t) {
    auto f = element(), g = element();
    auto mf = sr.member(f), mg = sr.member(g), ms = sr.member(f + g), mp = sr.member(f * g);
    bool ok = mf.member && mg.member && ms.member && mp.member;
    for (std::size_t i = 0; ok && i < 3; ++i)
      ok = ms.constants[i] == mf.constants[i] + mg.constants[i] && mp.constants[i] == mf.constants[i] * mg.constants[i];
    c.expect(ok, "closure for f = " + str(f) + ", g = " + str(g));
  }
  c.note("r_basis(5) has " + std::to_string(basis.size()) + " elements");
}

void criterion_3(Criterion& c) {
  auto sr = three_lines();
  std::vector<std::vector<Polynomial>> gens;
  for (std::size_t i = 0; i < 3; ++i) gens.push_back(sr.ideal(i).generators());
  for (auto [d, expected] : {std::pair<unsigned, std::size_t>{0, 1}, {3, 4}, {4, 6}}) {
    const auto dim = sr.r_basis(d).size();
    const auto oracle_dim = oracle::oracle_r_dimension(gens, sr.ring(), d, d + 3);
    c.expect(dim == expected, "r_basis(" + std::to_string(d) + ") has dimension " + std::to_string(expected) +
                                  " (got " + std::to_string(dim) + ")");
    c.expect(oracle_dim == expected, "oracle dimension at d = " + std::to_string(d));
  }
  const auto start = Clock::now();
  const auto b6 = sr.r_basis(6);
  const double t = seconds_since(start);
  c.expect(t < 5.0, "r_basis(6) runtime < 5 s");
  c.expect(b6.size() == oracle::oracle_r_dimension(gens, sr.ring(), 6, 9), "r_basis(6) matches oracle");
  std::ostringstream os;
  os << "r_basis(6): dimension " << b6.size() << " in " << t << " s";
  c.note(os.str());
}

void criterion_4(Criterion& c) {
  auto sr = three_lines();
  auto R = sr.ring();
  for (std::size_t i = 0; i < 3; ++i) {
    auto w = sr.partition_of_unity(i);
    const std::string tag = "i = " + std::to_string(i + 1) + ": ";
    c.expect(w.a + w.b == Polynomial::constant(R, 1), tag + "a + b = 1");
    c.expect(sr.ideal(i).normal_form(w.a).is_zero(), tag + "NF(a, I_i) = 0");
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i) c.expect(sr.ideal(j).normal_form(w.b).is_zero(), tag + "NF(b, I_j) = 0");
    auto ma = sr.member(w.a), mb = sr.member(w.b);
    c.expect(ma.member && mb.member, tag + "a, b in R");
    for (std::size_t j = 0; ma.member && mb.member && j < 3; ++j) {
      c.expect(ma.constants[j] == Rational(j == i ? 0 : 1), tag + "alpha pattern of a");
      c.expect(mb.constants[j] == Rational(j == i ? 1 : 0), tag + "alpha pattern of b");
    }
  }
}

bool strict_chain(const Ideal& id, std::size_t L, const Polynomial* expected_h) {
  auto w = chain_witness(id, L);
  if (expected_h && w.h != *expected_h) return false;
  return w.evidence.size() == L + 1 && oracle::oracle_span_rank(w.evidence, id.groebner()) == L + 1 &&
         id.contains(w.g) && !w.g.is_zero();
}

void criterion_5(Criterion& c) {
  auto R = ring_xy();
  const auto y = P("y", R), x = P("x", R);
  c.expect(strict_chain(I(R, {"x"}), 25, &y), "(x), h = y, strict to L = 25");
  c.expect(strict_chain(I(R, {"x*y - 1"}), 25, &x), "(xy-1), h = x, strict to L = 25");
  bool threw = false;
  try {
    chain_witness(I(R, {"x^2 - x", "y"}), 25);
  } catch (const HypothesisFailure&) {
    threw = true;
  }
  c.expect(threw, "(x^2-x, y) gives hypothesis failure");

  std::mt19937 rng(1005);
  std::size_t positive = 0;
  for (int t = 0; t < 50; ++t) {
    Ideal id = random_proper_ideal(rng, R, t % 2 ? 2 : 1, 3);
    const bool dim_pos = krull_dim(id) >= 1;
    bool chain_ok = false;
    try {
      chain_ok = strict_chain(id, 8, nullptr);
    } catch (const HypothesisFailure&) {
    }
    c.expect(chain_ok == dim_pos, "chain <=> dim >= 1 for " + id.to_string());
    positive += dim_pos;
  }
  c.note(std::to_string(positive) + "/50 random ideals positive-dimensional");
}

void criterion_6(Criterion& c) {
  auto R = ring_xy();
  auto line = SmearedRing(config_of(R, {I(R, {"x"})})).verdicts();
  c.expect(!line.noetherian && line.depicted_by_S, "{(x)}: nonnoetherian, depicted");
  auto pts = SmearedRing(config_of(R, {I(R, {"x^2 - x", "y"})})).verdicts();
  c.expect(pts.noetherian && !pts.depicted_by_S, "{(x^2-x, y)}: noetherian, not depicted");
  auto mixed = SmearedRing(config_of(R, {I(R, {"x^2 - x", "y"}), I(R, {"y - 1"})})).verdicts();
  c.expect(!mixed.noetherian && !mixed.depicted_by_S, "mixed: nonnoetherian, not depicted");
}

void criterion_7(Criterion& c) {
  auto sr = three_lines();
  c.expect(sr.locus_member(Q({3, 5})).in_locus, "(3,5) in locus");
  c.expect(!sr.locus_member(Q({0, 7})).in_locus, "(0,7) not in locus");
  c.expect(!sr.locus_member(Q({1, -2})).in_locus, "(1,-2) not in locus");
  std::mt19937 rng(1007);
  std::size_t on_variety = 0;
  for (int t = 0; t < 100; ++t) {
    auto p = random_point(rng, 2, 4);
    if (t % 3 == 0) p[0] = Rational(static_cast<long>(t % 4));
    bool on_some = false;
    for (std::size_t i = 0; i < 3; ++i) {
      bool all_vanish = true;
      for (const auto& g : sr.ideal(i).generators()) all_vanish = all_vanish && g.evaluate(p).is_zero();
      on_some = on_some || all_vanish;
    }
    on_variety += on_some;
    c.expect(sr.locus_member(p).in_locus == !on_some, "locus at random point");
  }
  c.note(std::to_string(on_variety) + "/100 points on some variety");
}

void criterion_8(Criterion& c) {
  c.expect(division_checks_enabled(), "checked division compiled in");
  const auto checks_before = division_checks_performed();
  std::size_t nf_calls = 0;
  std::mt19937 rng(1008);

  for (int inst = 0; inst < 20; ++inst) {
    auto R = inst % 2 ? ring_xy() : ring_xyz();
    auto gens = random_ideal(rng, R, 3, 3).generators();
    auto ref = buchberger(gens, MonomialOrder::grevlex());
    c.expect(oracle::is_reduced_groebner_basis(ref.elements()), "reduced basis passes S-pair oracle");
    for (int s = 0; s < 20; ++s) {
      std::shuffle(gens.begin(), gens.end(), rng);
      c.expect(buchberger(gens, MonomialOrder::grevlex()) == ref, "basis unchanged under shuffling");
    }
  }

  std::size_t members = 0;
  for (int inst = 0; inst < 200; ++inst) {
    auto R = ring_xy();
    Ideal id = random_proper_ideal(rng, R, 1 + inst % 2, 2, 3);
    Polynomial f = random_poly(rng, R, 3, 3);
    if (inst % 2 == 0) {
      f = Polynomial(R);
      for (const auto& g : id.generators()) f += random_poly(rng, R, 1, 2) * g;
    }
    auto d = normal_form(f, id.groebner(), true);
    ++nf_calls;
    Polynomial recombined = d.remainder;
    for (std::size_t j = 0; j < d.cofactors.size(); ++j) recombined += d.cofactors[j] * id.groebner().elements()[j];
    c.expect(recombined == f, "division identity");

    const bool gb_member = d.remainder.is_zero();
    unsigned bound = static_cast<unsigned>(std::max<long>(f.total_degree(), 0)) + 2;
    if (gb_member) {
      auto cof = id.membership_cofactors(f);
      c.expect(cof.has_value(), "membership cofactors exist");
      if (cof)
        for (std::size_t j = 0; j < cof->size(); ++j)
          if (!(*cof)[j].is_zero())
            bound = std::max<unsigned>(bound, static_cast<unsigned>(((*cof)[j] * id.generators()[j]).total_degree()));
    }
    c.expect(gb_member == oracle::oracle_member(f, id.generators(), bound),
             "membership agrees with oracle for " + str(f) + " in " + id.to_string());
    members += gb_member;
  }
  const auto checked = division_checks_performed() - checks_before;
  c.expect(checked >= nf_calls, "every normal_form call was checked");
  c.note(std::to_string(members) + "/200 members, " + std::to_string(checked) + " checked divisions");
}

/// Affine-linear ideal: generators are random linear forms plus constants. Such ideals are
/// prime (or the unit ideal), so intersections of them are radical.
Ideal random_linear_ideal(std::mt19937& rng, const RingPtr& R, unsigned ngens) {
  std::vector<Polynomial> gens;
  while (gens.size() < ngens) {
    Polynomial g = Polynomial::constant(R, random_rational(rng, 3));
    for (std::size_t v = 0; v < R->num_vars(); ++v) g += Polynomial::variable(R, v) * random_rational(rng, 2);
    if (!g.is_constant()) gens.push_back(g);
  }
  return Ideal(R, gens);
}

void criterion_9(Criterion& c) {
  std::mt19937 rng(1009);
  std::size_t positive = 0, radical_checked = 0;
  const auto R1 = PolyRing::make({"x"});
  std::vector<RingPtr> rings{R1, ring_xy(), ring_xyz()};
  for (int t = 0; t < 50; ++t) {
    const auto& R = rings[static_cast<std::size_t>(t) % 3];
    Ideal id = random_linear_ideal(rng, R, 1 + static_cast<unsigned>(t) % R->num_vars());
    if (t % 2) id = ideal_intersection(id, random_linear_ideal(rng, R, 1 + static_cast<unsigned>(t / 2) % R->num_vars()));
    if (id.is_unit()) {
      --t;
      continue;
    }
    SmearedRingConfig cfg{R, {id}, {true}};
    bool radical_ok = true;
    for (const auto& v : validate(cfg, true).violations) radical_ok &= v.kind != Violation::Kind::NotRadical;
    c.expect(radical_ok, "radical spot-check passes for " + id.to_string());
    ++radical_checked;
    bool some_zero = false;
    for (std::size_t v = 0; v < R->num_vars(); ++v) some_zero = some_zero || eliminate(id, {v}).is_zero();
    const auto dim = krull_dim(id);
    c.expect((dim >= 1) == some_zero, "dim >= 1 <=> zero projection for " + id.to_string());
    positive += dim >= 1;
  }
  c.note(std::to_string(positive) + "/" + std::to_string(radical_checked) + " ideals positive-dimensional");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"three lines: valid, nonnoetherian, depicted, dims [1,1,1]", criterion_1},
      {"membership, annihilated cubic multiples, ring closure", criterion_2},
      {"r_basis dimensions against dense oracle", criterion_3},
      {"partition of unity witnesses", criterion_4},
      {"chain witnesses and chain <=> positive dimension", criterion_5},
      {"single-ideal and mixed verdicts", criterion_6},
      {"locus membership", criterion_7},
      {"Groebner uniqueness, checked division, oracle membership", criterion_8},
      {"dimension against projection criterion on radical ideals", criterion_9},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Criterion c;
    std::string error;
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = !c.failed() && error.empty();
    failed += !ok;
    std::printf("criterion %zu: %s - %s (%zu checks%s%s)\n", k + 1, ok ? "PASS" : "FAIL", criteria[k].first.c_str(),
                c.checks(), c.notes().empty() ? "" : "; ", c.notes().c_str());
    for (const auto& f : c.failures()) std::printf("    failed: %s\n", f.c_str());
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
