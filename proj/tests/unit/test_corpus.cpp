#include <gtest/gtest.h>

#include "diq/corpus.hpp"
#include "diq/error.hpp"
#include "diq/ideal_ops.hpp"
#include "diq/mono_oracle.hpp"
#include "testing.hpp"

using namespace diq;
using namespace diqtest;

TEST(Build, TwoComponents) {
  auto r = ring({"x", "y"});
  DecomposedIdeal d = build("t", {{ideal(r, {"x"}), ideal(r, {"x"})},
                                  {ideal(r, {"x^2", "y"}), ideal(r, {"x", "y"})}});
  EXPECT_TRUE(equals(d.ideal, ideal(r, {"x^2", "x*y"})));
  ASSERT_EQ(d.components.size(), 2u);
  EXPECT_EQ(d.components[0].kind, ComponentKind::isolated);
  EXPECT_EQ(d.components[1].kind, ComponentKind::embedded);
}

TEST(Build, SinglePrimary) {
  auto r = ring({"x", "y"});
  DecomposedIdeal d = build("t", {{ideal(r, {"x^2", "y"}), ideal(r, {"x", "y"})}});
  EXPECT_TRUE(equals(d.ideal, ideal(r, {"x^2", "y"})));
  EXPECT_EQ(d.components[0].kind, ComponentKind::isolated);
}

TEST(Build, Rejections) {
  auto r = ring({"x", "y"});
  EXPECT_THROW(build("dup", {{ideal(r, {"x"}), ideal(r, {"x"})}, {ideal(r, {"x"}), ideal(r, {"x"})}}),
               PreconditionError);
  EXPECT_THROW(build("redundant", {{ideal(r, {"x"}), ideal(r, {"x"})},
                                   {ideal(r, {"x", "y^2"}), ideal(r, {"x", "y"})}}),
               PreconditionError);
  EXPECT_THROW(build("radical", {{ideal(r, {"x^2"}), ideal(r, {"x", "y"})}}), PreconditionError);
}

TEST(I1Family, Examples) {
  DecomposedIdeal one = i1_family(1);
  const RingPtr& r = one.ideal.ring();
  EXPECT_TRUE(equals(one.components[2].primary, ideal(r, {"x^3", "y^3", "z + 2"})));
  DecomposedIdeal two = i1_family(2);
  EXPECT_TRUE(equals(two.components[2].primary, ideal(two.ideal.ring(), {"x^3", "y^3", "z^2 + 2*z + 2"})));
  EXPECT_EQ(one.components[0].kind, ComponentKind::isolated);
  EXPECT_EQ(one.components[1].kind, ComponentKind::embedded);
  EXPECT_EQ(one.components[2].kind, ComponentKind::embedded);
}

TEST(I1Family, IntersectionMatchesStoredIdeal) {
  for (unsigned n = 1; n <= 20; ++n) {
    DecomposedIdeal d = i1_family(n);
    std::vector<Ideal> parts;
    for (const auto& c : d.components) parts.push_back(c.primary);
    EXPECT_TRUE(equals(intersect(parts), d.ideal)) << n;
  }
}

TEST(I1Family, LargeNMembershipSpotChecks) {
  DecomposedIdeal d = i1_family(60);
  std::mt19937_64 rng(60);
  for (int k = 0; k < 50; ++k) {
    Polynomial f(d.ideal.ring());
    f = Polynomial::constant(d.ideal.ring(), Coeff(1));
    for (const auto& c : d.components) {
      const auto& g = c.primary.generators();
      f = f * g[rng() % g.size()];
    }
    EXPECT_TRUE(is_member(f, d.ideal));
  }
}

TEST(AdjacentMinors, GeneratorCounts) {
  Ideal a = adjacent_minors(2, 2, 2);
  ASSERT_EQ(a.generators().size(), 1u);
  EXPECT_EQ(a.generators()[0], poly(a.ring(), "x11*x22 - x12*x21"));
  EXPECT_EQ(adjacent_minors(2, 2, 3).generators().size(), 2u);
  EXPECT_EQ(adjacent_minors(2, 3, 3).generators().size(), 4u);
  Ideal c = adjacent_minors(3, 3, 3);
  EXPECT_EQ(c.generators()[0].size(), 6u);
  EXPECT_THROW(adjacent_minors(3, 2, 4), PreconditionError);
}

TEST(AssertedPrimes, AreProperAndContainTheirIdeal) {
  for (const auto& p : asserted_primes()) {
    EXPECT_FALSE(p.prime.is_unit()) << p.name;
    EXPECT_TRUE(contains(p.prime, p.ideal)) << p.name;
  }
}

TEST(RandomMonomialIdeal, DeterministicAndMinimal) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    Ideal a = random_monomial_ideal(s, 3, 5, 4);
    Ideal b = random_monomial_ideal(s, 3, 5, 4);
    EXPECT_EQ(a.generators(), b.generators());
    const auto& g = a.generators();
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (i != j) EXPECT_FALSE(g[i].leading_monomial().divides(g[j].leading_monomial()));
      }
    }
    EXPECT_EQ(random_monomial_ideal(s, 4, 3, 1).generators().size(), 1u);
  }
}

TEST(StandardCorpus, Shape) {
  auto corpus = standard_corpus();
  EXPECT_GE(corpus.size(), 20u);
  for (const auto& d : corpus) {
    const auto n = d.ideal.ring()->nvars();
    EXPECT_GE(n, 2u);
    EXPECT_LE(n, 4u);
    auto decoys = decoy_primes(d);
    EXPECT_GE(decoys.size(), 5u) << d.name;
  }
  EXPECT_GE(hull_instances().size(), 10u);
}
