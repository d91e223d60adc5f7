#include <gtest/gtest.h>

#include "diq/corpus.hpp"
#include "diq/error.hpp"
#include "diq/ideal_ops.hpp"
#include "diq/localize.hpp"
#include "diq/mono_oracle.hpp"
#include "testing.hpp"

using namespace diq;
using namespace diqtest;

class Xy : public ::testing::Test {
 protected:
  RingPtr r = ring({"x", "y"});
  Ideal i = ideal(r, {"x^2", "x*y"});
  Ideal px = ideal(r, {"x"});
  Ideal py = ideal(r, {"y"});
  Ideal pxy = ideal(r, {"x", "y"});
};

TEST_F(Xy, Diq) {
  EXPECT_TRUE(equals(diq::diq(i, pxy), pxy));
  EXPECT_TRUE(equals(diq::diq(i, px), px));
  EXPECT_TRUE(equals(diq::diq(i, i), i));
  // Chain through the oracle: (I:(I:J)) by pure combinatorics.
  MonomialIdeal mi = MonomialIdeal::from_ideal(i);
  MonomialIdeal inner = oracle::quotient(mi, MonomialIdeal::from_ideal(pxy));
  EXPECT_TRUE(equals(diq::diq(i, pxy), oracle::quotient(mi, inner).to_ideal(r)));
}

TEST_F(Xy, SaturatedQuotients) {
  EXPECT_TRUE(equals(sat_quot_1(i, i), i));
  EXPECT_TRUE(equals(sat_quot_1(i, px), px));
  EXPECT_TRUE(sat_quot_1(i, Ideal::unit(r)).is_unit());
  EXPECT_TRUE(equals(sat_quot_2(i, px), i));
  EXPECT_TRUE(sat_quot_2(i, py).is_unit());
  EXPECT_TRUE(equals(sat_quot_3(i, pxy), pxy));
  EXPECT_TRUE(equals(sat_quot_3(i, px), i));
  EXPECT_TRUE(contains(sat_quot_3(i, Ideal::unit(r)), i));
}

TEST_F(Xy, SaturatedQuotientInvariance) {
  EXPECT_TRUE(is_sqi(i, px));
  EXPECT_TRUE(is_sqi(i, i));
  EXPECT_FALSE(is_sqi(i, ideal(r, {"x^2", "y"})));
  EXPECT_THROW(is_sqi(i, Ideal::unit(r)), PreconditionError);
}

TEST_F(Xy, PrimeDivisor) {
  for (auto test : {DivisorTest::quotient, DivisorTest::saturation}) {
    EXPECT_TRUE(is_prime_divisor(i, PrimeInput(px), test).is_divisor);
    EXPECT_TRUE(is_prime_divisor(i, PrimeInput(pxy), test).is_divisor);
    EXPECT_FALSE(is_prime_divisor(i, PrimeInput(py), test).is_divisor);
  }
  EXPECT_THROW(PrimeInput(Ideal::unit(r)), PreconditionError);
  DivisorVerdict v = is_prime_divisor(i, PrimeInput(pxy));
  EXPECT_EQ(v.witness.size(), 2u);
  EXPECT_FALSE(v.is_isolated.has_value());
}

TEST_F(Xy, IsolatedDivisor) {
  DivisorVerdict a = is_isolated_divisor(i, PrimeInput(px));
  ASSERT_TRUE(a.is_isolated.has_value());
  EXPECT_TRUE(*a.is_isolated);
  DivisorVerdict b = is_isolated_divisor(i, PrimeInput(pxy));
  ASSERT_TRUE(b.is_isolated.has_value());
  EXPECT_FALSE(*b.is_isolated);
  EXPECT_TRUE(*is_isolated_divisor(ideal(r, {"x^2"}), PrimeInput(px)).is_isolated);
  EXPECT_THROW(is_isolated_divisor(i, PrimeInput(py)), PreconditionError);
  DivisorVerdict c = is_isolated_divisor(i, PrimeInput(ideal(r, {"x", "y - 1"})));
  EXPECT_FALSE(c.is_divisor);
  EXPECT_FALSE(c.is_isolated.has_value());
}

TEST_F(Xy, PseudoPrimary) {
  EXPECT_TRUE(equals(pseudo_primary_component(i, PrimeInput(px)), i));
  Ideal j = ideal(r, {"x^2*y^3"});
  EXPECT_TRUE(equals(pseudo_primary_component(j, PrimeInput(px)), ideal(r, {"x^2"})));
  Ideal primary = ideal(r, {"x^2", "y^3"});
  EXPECT_TRUE(equals(pseudo_primary_component(primary, PrimeInput(pxy)), primary));
  EXPECT_THROW(pseudo_primary_component(i, PrimeInput(pxy)), PreconditionError);
}

TEST_F(Xy, Hull) {
  EXPECT_TRUE(equals(hull(i, RegularSequenceHull{}), px));
  EXPECT_TRUE(equals(hull(i, MisHull{PrimeInput(px)}), px));
  Ideal primary = ideal(r, {"x^2", "x*y", "y^3"});
  EXPECT_TRUE(equals(hull(primary, RegularSequenceHull{}), primary));
  EXPECT_TRUE(equals(hull(primary, MisHull{PrimeInput(pxy)}), primary));
  EXPECT_EQ(codimension(i), 1);
  EXPECT_EQ(codimension(Ideal::unit(r)), 3);
}

TEST_F(Xy, IsolatedComponent) {
  Ideal c = isolated_component(i, PrimeInput(px));
  EXPECT_TRUE(equals(c, px));
  EXPECT_TRUE(equals(intersect(c, ideal(r, {"x^2", "y"})), i));
  EXPECT_THROW(isolated_component(i, PrimeInput(pxy)), PreconditionError);
}

TEST_F(Xy, ComponentCriteria) {
  PrimeInput p(pxy);
  ComponentCheck g = is_primary_component(i, p, ideal(r, {"x^2", "y"}), ComponentCriterion::general);
  EXPECT_EQ(g.verdict, CriterionVerdict::holds);
  ComponentCheck m = is_primary_component(i, p, ideal(r, {"x^2", "x*y", "y^2"}),
                                          ComponentCriterion::maximal);
  EXPECT_EQ(m.verdict, CriterionVerdict::holds);
  ComponentCheck iso = is_primary_component(i, PrimeInput(px), px, ComponentCriterion::isolated);
  EXPECT_EQ(iso.verdict, CriterionVerdict::holds);
  // (x, y) contains (I:P^inf) = (x): the general criterion does not apply.
  ComponentCheck na = is_primary_component(i, p, pxy, ComponentCriterion::general);
  EXPECT_EQ(na.verdict, CriterionVerdict::inapplicable);
  ComponentCheck fail = is_primary_component(i, p, pxy, ComponentCriterion::maximal);
  EXPECT_EQ(fail.verdict, CriterionVerdict::fails);
  // Not P-primary at all.
  EXPECT_THROW(is_primary_component(i, p, ideal(r, {"x"}), ComponentCriterion::general),
               PreconditionError);
  ComponentCheck isolated_needs_containment =
      is_primary_component(i, PrimeInput(px), ideal(r, {"x^2"}), ComponentCriterion::isolated);
  EXPECT_EQ(isolated_needs_containment.verdict, CriterionVerdict::inapplicable);
}

TEST_F(Xy, AutomaticCriterionChoice) {
  PrimeInput p(pxy);
  Ideal q = ideal(r, {"x^2", "x*y", "y^2"});
  EXPECT_EQ(is_primary_component(i, p, q, ComponentCriterion::automatic).criterion,
            ComponentCriterion::maximal);
  auto xyz = ring({"x", "y", "z"});
  Ideal j = ideal(xyz, {"x^2", "x*y"});
  ComponentCheck c = is_primary_component(j, PrimeInput(ideal(xyz, {"x", "y"})),
                                          ideal(xyz, {"x^2", "y"}), ComponentCriterion::automatic);
  EXPECT_EQ(c.criterion, ComponentCriterion::general);
  EXPECT_EQ(c.verdict, CriterionVerdict::holds);
}

TEST_F(Xy, LpaWorkedExamples) {
  for (auto s : {LpaStrategy::plain, LpaStrategy::bracket, LpaStrategy::mis, LpaStrategy::bracket_mis}) {
    LpaOptions o;
    o.strategy = s;
    LpaOutcome a = lpa(i, PrimeInput(px), o);
    EXPECT_EQ(a.verdict, LpaVerdict::isolated_component);
    ASSERT_TRUE(a.component);
    EXPECT_TRUE(equals(*a.component, px));
    EXPECT_FALSE(a.exponent_m);

    LpaOutcome b = lpa(i, PrimeInput(pxy), o);
    EXPECT_EQ(b.verdict, LpaVerdict::embedded_component);
    ASSERT_TRUE(b.component);
    EXPECT_EQ(b.exponent_m, 2u);
    EXPECT_TRUE(equals(*b.component, ideal(r, {"x^2", "x*y", "y^2"})));
    EXPECT_TRUE(equals(intersect(px, *b.component), i));

    LpaOutcome c = lpa(i, PrimeInput(py), o);
    EXPECT_EQ(c.verdict, LpaVerdict::not_a_divisor);
    EXPECT_FALSE(c.component);
  }
}

TEST_F(Xy, LpaFirstCandidateRejected) {
  LpaOptions o;
  o.strategy = LpaStrategy::bracket;
  LpaOutcome b = lpa(i, PrimeInput(pxy), o);
  std::vector<bool> loop;
  for (const auto& c : b.certificates) {
    if (c.criterion == "criterion-1" || c.criterion == "criterion-3") loop.push_back(c.passed);
  }
  EXPECT_EQ(loop, (std::vector<bool>{false, true}));
  // Step m=1 on its own: hull(I + (x, y)) = (x, y), and (x) ∩ (x, y) != I.
  Ideal h = hull(sum(i, pxy), RegularSequenceHull{});
  EXPECT_TRUE(equals(h, pxy));
  EXPECT_FALSE(equals(intersect(px, h), i));
}

TEST_F(Xy, LpaBudget) {
  LpaOptions o;
  o.max_m = 1;
  try {
    lpa(i, PrimeInput(pxy), o);
    FAIL();
  } catch (const LpaBudgetExhausted& e) {
    EXPECT_FALSE(e.certificates().empty());
    EXPECT_FALSE(e.certificates().back().passed);
  }
}

TEST_F(Xy, Localize) {
  Ideal all = localize(i, {PrimeInput(px), PrimeInput(pxy)});
  EXPECT_TRUE(equals(all, i));
  EXPECT_TRUE(equals(localize(i, {PrimeInput(px)}), px));
  EXPECT_TRUE(equals(localize_fg(i, {poly(r, "y")}), px));
  EXPECT_THROW(localize(i, {PrimeInput(py)}), PreconditionError);
  EXPECT_THROW(localize_fg(i, {Polynomial(r)}), PreconditionError);
}

TEST(LpaFamily, I1IsolatedComponentIsXSquared) {
  for (unsigned n : {1u, 2u, 4u, 8u}) {
    DecomposedIdeal d = i1_family(n);
    const RingPtr& r = d.ideal.ring();
    LpaOutcome out = lpa(d.ideal, PrimeInput(ideal(r, {"x"})));
    ASSERT_EQ(out.verdict, LpaVerdict::isolated_component) << n;
    EXPECT_TRUE(equals(*out.component, ideal(r, {"x^2"}))) << n;
  }
}

TEST(LpaFamily, I1EmbeddedLineComponent) {
  DecomposedIdeal d = i1_family(2);
  const RingPtr& r = d.ideal.ring();
  LpaOutcome out = lpa(d.ideal, PrimeInput(ideal(r, {"x", "y"})));
  ASSERT_EQ(out.verdict, LpaVerdict::embedded_component);
  // Any valid (x,y)-component recombines with the known others.
  Ideal recombined = intersect(std::vector<Ideal>{d.components[0].primary, *out.component,
                                                  d.components[2].primary});
  EXPECT_TRUE(equals(recombined, d.ideal));
}

TEST(LpaProperties, CertifiedOutputsContainInput) {
  for (const auto& d : standard_corpus()) {
    for (const auto& c : d.components) {
      LpaOutcome out = lpa(d.ideal, PrimeInput(c.prime));
      ASSERT_NE(out.verdict, LpaVerdict::not_a_divisor) << d.name;
      EXPECT_TRUE(contains(*out.component, d.ideal)) << d.name;
      EXPECT_EQ(out.verdict == LpaVerdict::isolated_component,
                c.kind == ComponentKind::isolated)
          << d.name;
      EXPECT_EQ(out.exponent_m.has_value(), out.verdict == LpaVerdict::embedded_component);
      ASSERT_FALSE(out.certificates.empty());
      EXPECT_TRUE(out.certificates.back().passed) << d.name;
    }
  }
}

TEST(LpaProperties, BracketHullsDecreaseWithM) {
  auto r = ring({"x", "y", "z"});
  Ideal i = intersect(ideal(r, {"x^2", "y"}), ideal(r, {"x", "y^2", "z"}));
  Ideal p = ideal(r, {"x", "y", "z"});
  std::optional<Ideal> previous;
  for (unsigned m = 1; m <= 4; ++m) {
    Ideal h = hull(sum(i, bracket_power(p, m)), RegularSequenceHull{});
    if (previous) EXPECT_TRUE(contains(*previous, h)) << m;
    previous = h;
  }
}

TEST(LpaProperties, DiqRadicalLaw) {
  for (const auto& d : standard_corpus()) {
    for (const auto& probe : d.components) {
      const Ideal& j = probe.prime;
      Ideal q = diq::diq(d.ideal, j);
      std::vector<Ideal> above;
      for (const auto& c : d.components) {
        if (contains(c.prime, j)) above.push_back(c.prime);
      }
      ASSERT_FALSE(above.empty());
      Ideal meet = intersect(above);
      for (const auto& g : meet.generators()) EXPECT_TRUE(radical_membership(g, q)) << d.name;
      for (const auto& g : q.generators()) EXPECT_TRUE(radical_membership(g, meet)) << d.name;
    }
  }
}
