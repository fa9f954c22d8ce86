#include <gtest/gtest.h>

#include "oracle/oracle.hpp"
#include "smeared/errors.hpp"
#include "smeared/smeared_ring.hpp"
#include "support.hpp"

using namespace smeared;
using namespace smeared::testing;

namespace {

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

bool has_violation(const ValidationReport& r, Violation::Kind kind) {
  for (const auto& v : r.violations)
    if (v.kind == kind) return true;
  return false;
}

}  // namespace

TEST(Validate, Examples) {
  auto R = ring_xy();
  EXPECT_TRUE(validate(config_of(R, {I(R, {"x"}), I(R, {"x - 1"}), I(R, {"x - 2"})})).ok());

  auto r = validate(config_of(R, {I(R, {"x"}), I(R, {"y"})}));
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].kind, Violation::Kind::NotCoprime);
  EXPECT_EQ(r.violations[0].ideals, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.violations[0].message, "not coprime: pair (1,2)");

  auto m = validate(config_of(R, {I(R, {"x", "y"})}));
  ASSERT_EQ(m.violations.size(), 1u);
  EXPECT_EQ(m.violations[0].kind, Violation::Kind::Maximal);
}

TEST(Validate, ReportsEveryViolation) {
  auto R = ring_xy();
  auto r = validate(config_of(R, {Ideal::zero(R), Ideal::unit(R), I(R, {"x - 3", "y"}), I(R, {"x^2 - 9"})}));
  EXPECT_TRUE(has_violation(r, Violation::Kind::Zero));
  EXPECT_TRUE(has_violation(r, Violation::Kind::NotProper));
  EXPECT_TRUE(has_violation(r, Violation::Kind::Maximal));
  EXPECT_TRUE(has_violation(r, Violation::Kind::NotCoprime));
  EXPECT_TRUE(validate({R, {}, {}}).violations.at(0).kind == Violation::Kind::EmptyFamily);
  auto other = PolyRing::make({"u", "v"});
  EXPECT_TRUE(has_violation(validate(config_of(R, {I(other, {"u"})})), Violation::Kind::WrongRing));
  EXPECT_THROW(SmearedRing(config_of(R, {I(R, {"x"}), I(R, {"y"})})), ValidationFailed);
}

TEST(Validate, RadicalSpotCheck) {
  auto R = ring_xy();
  auto cfg = config_of(R, {I(R, {"x^2"}), I(R, {"x - 1"})});
  EXPECT_TRUE(validate(cfg).ok());
  EXPECT_TRUE(has_violation(validate(cfg, true), Violation::Kind::NotRadical));
  cfg.radical_asserted = {false, true};
  EXPECT_TRUE(validate(cfg, true).ok());
  EXPECT_TRUE(validate(config_of(R, {I(R, {"x*(x - 3)"}), I(R, {"x - 1"})}), true).ok());
}

TEST(Member, Examples) {
  auto sr = three_lines();
  auto R = sr.ring();
  auto c = sr.member(P("x", R));
  ASSERT_TRUE(c.member);
  EXPECT_EQ(c.constants, Q({0, 1, 2}));

  auto n = sr.member(P("y", R));
  EXPECT_FALSE(n.member);
  EXPECT_EQ(n.witness_index, std::optional<std::size_t>(0));
  EXPECT_EQ(n.nonconstant_remainder, P("y", R));

  auto z = sr.member(P("x*(x - 1)*(x - 2)*y", R));
  ASSERT_TRUE(z.member);
  EXPECT_EQ(z.constants, Q({0, 0, 0}));
  EXPECT_THROW(sr.member(P("u", PolyRing::make({"u", "v"}))), RingMismatch);
}

TEST(Evaluate, Examples) {
  auto sr = three_lines();
  auto R = sr.ring();
  EXPECT_EQ(sr.evaluate_at_smeared_point(P("x", R), 1), Rational(1));
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_EQ(sr.evaluate_at_smeared_point(P("x*(x - 1)*(x - 2)*y", R), i), Rational(0));
  EXPECT_THROW(sr.evaluate_at_smeared_point(P("y", R), 0), NotMember);
  EXPECT_THROW(sr.evaluate_at_smeared_point(P("x", R), 3), PreconditionError);
}

TEST(Partition, SpecExampleAndInvariants) {
  auto sr = three_lines();
  auto R = sr.ring();
  auto w = sr.partition_of_unity(0);
  EXPECT_EQ(w.a + w.b, P("1", R));
  EXPECT_TRUE(sr.ideal(0).normal_form(w.a).is_zero());
  EXPECT_TRUE(sr.ideal(1).normal_form(w.b).is_zero());
  EXPECT_TRUE(sr.ideal(2).normal_form(w.b).is_zero());
  EXPECT_FALSE(sr.ideal(0).contains(w.b));
  EXPECT_FALSE(sr.ideal(1).contains(w.a));
  auto ma = sr.member(w.a);
  ASSERT_TRUE(ma.member);
  EXPECT_EQ(ma.constants, Q({0, 1, 1}));
  EXPECT_EQ(w.a_membership.constants, ma.constants);
  // The canonical reduction lands on the expected polynomial.
  EXPECT_EQ(w.a, P("-1/2*x^2 + 3/2*x", R));
}

TEST(Partition, DistinctSmearedPointsOnRandomConfigs) {
  std::mt19937 rng(31);
  auto R = ring_xy();
  std::uniform_int_distribution<long> gap(1, 4);
  for (int inst = 0; inst < 6; ++inst) {
    // Vertical lines right of x = 1 and the two points (0,0), (1,0): pairwise coprime.
    std::vector<Ideal> ideals{I(R, {"x^2 - x", "y"})};
    long shift = 1;
    for (int k = 0; k < 3; ++k) {
      shift += gap(rng);
      ideals.push_back(Ideal(R, {P("x", R) - Polynomial::constant(R, Rational(shift))}));
    }
    SmearedRing sr(config_of(R, ideals));
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      auto w = sr.partition_of_unity(i);
      EXPECT_EQ(w.a + w.b, P("1", R));
      for (std::size_t j = 0; j < ideals.size(); ++j) {
        EXPECT_EQ(sr.ideal(j).contains(w.a), j == i);
        EXPECT_EQ(sr.ideal(j).contains(w.b), j != i);
      }
    }
  }
}

TEST(Partition, RequiresTwoIdeals) {
  auto R = ring_xy();
  SmearedRing one(config_of(R, {I(R, {"x"})}));
  EXPECT_THROW(one.partition_of_unity(0), PreconditionError);
}

TEST(Verdicts, Examples) {
  auto v = three_lines().verdicts();
  EXPECT_FALSE(v.noetherian);
  EXPECT_TRUE(v.depicted_by_S);
  EXPECT_EQ(v.per_ideal_dims, (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(v.gdim_lower_bounds, v.per_ideal_dims);
  EXPECT_TRUE(v.radicality_asserted);

  auto R = ring_xy();
  auto pts = SmearedRing(config_of(R, {I(R, {"x^2 - x", "y"})})).verdicts();
  EXPECT_TRUE(pts.noetherian);
  EXPECT_FALSE(pts.depicted_by_S);
  EXPECT_EQ(pts.per_ideal_dims, (std::vector<std::size_t>{0}));

  auto mixed = SmearedRing(config_of(R, {I(R, {"x^2 - x", "y"}), I(R, {"y - 1"})})).verdicts();
  EXPECT_FALSE(mixed.noetherian);
  EXPECT_FALSE(mixed.depicted_by_S);
  EXPECT_EQ(mixed.per_ideal_dims, (std::vector<std::size_t>{0, 1}));

  SmearedRingConfig unasserted{R, {I(R, {"x"})}, {}};
  EXPECT_FALSE(SmearedRing(unasserted).verdicts().radicality_asserted);
}

TEST(Locus, Examples) {
  auto sr = three_lines();
  auto in = sr.locus_member(Q({3, 5}));
  EXPECT_TRUE(in.in_locus);
  ASSERT_EQ(in.evidence.size(), 3u);
  EXPECT_EQ(in.evidence[0].value, Rational(3));
  EXPECT_EQ(in.evidence[1].value, Rational(2));
  EXPECT_EQ(in.evidence[2].value, Rational(1));

  auto out = sr.locus_member(Q({0, 7}));
  EXPECT_FALSE(out.in_locus);
  EXPECT_FALSE(out.evidence[0].nonvanishing_generator.has_value());

  auto out2 = sr.locus_member(Q({1, -2}));
  EXPECT_FALSE(out2.in_locus);
  EXPECT_TRUE(out2.evidence[0].nonvanishing_generator.has_value());
  EXPECT_FALSE(out2.evidence[1].nonvanishing_generator.has_value());
  EXPECT_THROW(sr.locus_member(Q({1})), DimensionMismatch);
}

TEST(Locus, FalseExactlyOnSomeVariety) {
  std::mt19937 rng(32);
  auto sr = three_lines();
  for (int t = 0; t < 40; ++t) {
    auto p = random_point(rng, 2, 4);
    if (t % 2 == 0) p[0] = Rational(static_cast<long>(t % 3));
    bool on_some = false;
    for (std::size_t i = 0; i < 3; ++i) {
      bool all_vanish = true;
      for (const auto& g : sr.ideal(i).generators()) all_vanish &= g.evaluate(p).is_zero();
      on_some |= all_vanish;
    }
    EXPECT_EQ(sr.locus_member(p).in_locus, !on_some);
  }
}

TEST(Chain, LineGivesMonomialPowers) {
  auto R = ring_xy();
  auto w = chain_witness(I(R, {"x"}), 8);
  EXPECT_EQ(w.g, P("x", R));
  EXPECT_EQ(w.h, P("y", R));
  ASSERT_EQ(w.evidence.size(), 9u);
  for (std::size_t j = 0; j <= 8; ++j) EXPECT_EQ(w.evidence[j], P("y", R).pow(j));
}

TEST(Chain, HyperbolaPowersAreIndependent) {
  auto R = ring_xy();
  Ideal hyp = I(R, {"x*y - 1"});
  auto w = chain_witness(hyp, 10);
  EXPECT_EQ(w.h, P("x", R));
  EXPECT_EQ(oracle::oracle_span_rank(w.evidence, hyp.groebner()), 11u);
  // Proper containments from a rank that grows by one at every step.
  for (std::size_t l = 1; l <= 10; ++l) {
    std::vector<Polynomial> prefix(w.evidence.begin(), w.evidence.begin() + static_cast<long>(l) + 1);
    EXPECT_EQ(oracle::oracle_span_rank(prefix, hyp.groebner()), l + 1);
  }
}

TEST(Chain, ZeroDimensionalIdealsHaveNoChain) {
  auto R = ring_xy();
  Ideal pts = I(R, {"x^2 - x", "y"});
  EXPECT_THROW(chain_witness(pts, 5), HypothesisFailure);
  // x^2 reduces to x, so the second power is the first dependent one.
  auto ps = power_span(pts, P("x", R), 5);
  EXPECT_EQ(ps.first_dependent_step, std::optional<std::size_t>(2));
  EXPECT_FALSE(select_chain_element(pts).has_value());
}

TEST(Chain, SelectsAVariableWhenPositiveDimensional) {
  auto R = ring_xyz();
  Ideal curve = I(R, {"x - 1", "y - 2"});
  auto h = select_chain_element(curve);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(*h, P("z", R));
  std::mt19937 rng(37);
  for (int inst = 0; inst < 20; ++inst) {
    Ideal id = random_proper_ideal(rng, R, 2, 2);
    auto sel = select_chain_element(id);
    EXPECT_EQ(sel.has_value(), krull_dim(id) >= 1) << id.to_string();
    if (sel) {
      EXPECT_EQ(sel->total_degree(), 1);
      EXPECT_EQ(sel->terms().size(), 1u);
    }
  }
}

TEST(Chain, SucceedsExactlyWhenPositiveDimensional) {
  std::mt19937 rng(33);
  for (int inst = 0; inst < 20; ++inst) {
    auto R = ring_xy();
    Ideal id = random_proper_ideal(rng, R, inst % 3 == 0 ? 1 : 2, 2);
    const bool positive = krull_dim(id) >= 1;
    bool ok = true;
    try {
      auto w = chain_witness(id, 6);
      EXPECT_EQ(oracle::oracle_span_rank(w.evidence, id.groebner()), 7u);
    } catch (const HypothesisFailure&) {
      ok = false;
    }
    EXPECT_EQ(ok, positive) << id.to_string();
  }
}

TEST(RBasis, ThreeLinesDimensions) {
  auto sr = three_lines();
  EXPECT_EQ(sr.r_basis(0).size(), 1u);
  EXPECT_EQ(sr.r_basis(3).size(), 4u);
  auto b4 = sr.r_basis(4);
  EXPECT_EQ(b4.size(), 6u);
  std::vector<std::vector<Polynomial>> gens;
  for (std::size_t i = 0; i < 3; ++i) gens.push_back(sr.ideal(i).generators());
  EXPECT_EQ(oracle::oracle_r_dimension(gens, sr.ring(), 4, 6), 6u);
  for (const auto& f : b4) EXPECT_TRUE(sr.member(f).member) << f;
}

TEST(RBasis, MonotoneAndMembersOnMixedConfig) {
  auto R = ring_xy();
  SmearedRing sr(config_of(R, {I(R, {"x^2 - x", "y"}), I(R, {"y - 1"})}));
  std::size_t prev = 0;
  for (std::size_t d = 0; d <= 4; ++d) {
    auto b = sr.r_basis(d);
    EXPECT_GE(b.size(), prev);
    prev = b.size();
    for (const auto& f : b) {
      EXPECT_TRUE(sr.member(f).member);
      EXPECT_LE(f.total_degree(), static_cast<long>(d));
    }
    std::vector<std::vector<Polynomial>> gens{sr.ideal(0).generators(), sr.ideal(1).generators()};
    EXPECT_EQ(oracle::oracle_r_dimension(gens, R, static_cast<unsigned>(d), static_cast<unsigned>(d) + 3), b.size());
  }
}

TEST(Constancy, Examples) {
  auto sr = three_lines();
  auto R = sr.ring();
  auto f = P("x*(x - 1)*(x - 2)*y + 7", R);
  auto rep = sr.smeared_constancy_check(f, 0, {Q({0, 0}), Q({0, 1}), Q({0, -5})});
  EXPECT_TRUE(rep.consistent());
  EXPECT_EQ(rep.alpha, Rational(7));
  EXPECT_EQ(rep.values, Q({7, 7, 7}));

  std::mt19937 rng(34);
  std::vector<std::vector<Rational>> pts;
  for (int k = 0; k < 5; ++k) pts.push_back({Rational(2), random_rational(rng, 9, true)});
  auto rx = sr.smeared_constancy_check(P("x", R), 2, pts);
  EXPECT_TRUE(rx.consistent());
  for (const auto& v : rx.values) EXPECT_EQ(v, Rational(2));

  EXPECT_THROW(sr.smeared_constancy_check(f, 0, {Q({1, 0})}), PreconditionError);
  EXPECT_THROW(sr.smeared_constancy_check(P("y", R), 0, {Q({0, 0})}), NotMember);
}

TEST(RingProperties, ClosureUnderSumAndProduct) {
  auto sr = three_lines();
  auto basis = sr.r_basis(5);
  std::mt19937 rng(35);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int t = 0; t < 30; ++t) {
    auto f = basis[pick(rng)] * random_rational(rng, 4, true);
    auto g = basis[pick(rng)] + basis[pick(rng)];
    auto mf = sr.member(f), mg = sr.member(g), ms = sr.member(f + g), mp = sr.member(f * g);
    ASSERT_TRUE(mf.member && mg.member && ms.member && mp.member);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_EQ(ms.constants[i], mf.constants[i] + mg.constants[i]);
      EXPECT_EQ(mp.constants[i], mf.constants[i] * mg.constants[i]);
    }
  }
}

TEST(RingProperties, IntersectionElementsHaveZeroAlpha) {
  auto sr = three_lines();
  auto R = sr.ring();
  std::mt19937 rng(36);
  for (int t = 0; t < 15; ++t) {
    auto f = P("x*(x - 1)*(x - 2)", R) * random_nonzero_poly(rng, R, 2, 3);
    auto c = sr.member(f);
    ASSERT_TRUE(c.member);
    EXPECT_EQ(c.constants, Q({0, 0, 0}));
  }
}

TEST(RingProperties, VerdictConsistency) {
  auto R = ring_xy();
  std::vector<SmearedRingConfig> configs{
      config_of(R, {I(R, {"x"}), I(R, {"x - 1"})}),
      config_of(R, {I(R, {"x^2 - x", "y"}), I(R, {"x^2 - x", "y - 1"})}),
      config_of(R, {I(R, {"x*y - 1"})}),
  };
  for (const auto& cfg : configs) {
    auto v = SmearedRing(cfg).verdicts();
    if (v.depicted_by_S) {
      EXPECT_FALSE(v.noetherian);
    }
    bool all_zero = true;
    for (auto d : v.per_ideal_dims) all_zero &= d == 0;
    EXPECT_EQ(v.noetherian, all_zero);
  }
}
