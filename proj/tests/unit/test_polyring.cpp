#include <gtest/gtest.h>

#include "diq/error.hpp"
#include "diq/field.hpp"
#include "diq/order.hpp"
#include "testing.hpp"

using namespace diq;
using namespace diqtest;

namespace {

OrderPtr make(MonomialOrder o) { return std::make_shared<const MonomialOrder>(std::move(o)); }

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int max_exp) {
  std::vector<Monomial::Exponent> e(n);
  for (auto& x : e) x = static_cast<int>(rng() % (max_exp + 1));
  return Monomial(std::move(e));
}

std::vector<OrderPtr> orders_for(std::size_t n) {
  std::vector<OrderPtr> out{make(MonomialOrder::lex(n)), make(MonomialOrder::grevlex(n))};
  out.push_back(make(MonomialOrder::elimination(n, {0})));
  out.push_back(make(MonomialOrder::elimination(n, {n - 1}, BaseOrder::lex, BaseOrder::grevlex)));
  return out;
}

}  // namespace

TEST(Ring, RejectsBadVariableLists) {
  EXPECT_THROW(RingCtx::make({}), PreconditionError);
  EXPECT_THROW(RingCtx::make({"x", "x"}), PreconditionError);
  EXPECT_THROW(RingCtx::make({"1x"}), PreconditionError);
  EXPECT_NO_THROW(RingCtx::make({"x_1", "y2"}));
}

TEST(Ring, AuxiliaryNamesNeverCollide) {
  auto r = ring({"x", "t"});
  auto ext = r->with_aux(2);
  ASSERT_EQ(ext->nvars(), 4u);
  EXPECT_EQ(ext->user_nvars(), 2u);
  for (std::size_t i = 2; i < 4; ++i) EXPECT_EQ(ext->name(i).front(), '@');
  EXPECT_THROW(parse_poly("@t0", ext), ParseError);
}

TEST(Field, PrimeFieldArithmetic) {
  EXPECT_THROW(CoefficientField::prime_field(10), PreconditionError);
  EXPECT_THROW(CoefficientField::prime_field(2147483659ull), PreconditionError);
  auto f = CoefficientField::prime_field(7);
  EXPECT_EQ(f.canonical(Coeff(-1)), Coeff(6));
  EXPECT_EQ(f.canonical(Coeff(1, 2)), Coeff(4));
  EXPECT_EQ(f.mul(Coeff(3), f.inv(Coeff(3))), Coeff(1));
  EXPECT_THROW(f.inv(Coeff(0)), PreconditionError);
}

TEST(Field, PrimeFieldPolynomials) {
  auto r = RingCtx::make({"x", "y"}, CoefficientField::prime_field(5));
  Polynomial p = poly(r, "(x + y)^5");
  EXPECT_EQ(format_poly(p), "x^5 + y^5");
  EXPECT_TRUE((poly(r, "5*x")).is_zero());
}

TEST(PolyArith, Examples) {
  auto r = ring({"x", "y"});
  EXPECT_EQ(poly_arith(poly(r, "x + y"), poly(r, "x - y"), ArithOp::mul), poly(r, "x^2 - y^2"));
  Polynomial p = poly(r, "3*x^2*y - 1/2");
  EXPECT_EQ(poly_arith(p, Polynomial(r), ArithOp::add), p);
  Polynomial z = poly_arith(poly(r, "x^2"), poly(r, "x^2"), ArithOp::sub);
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.terms().empty());
}

TEST(PolyArith, ContextMismatch) {
  auto a = ring({"x", "y"});
  auto b = ring({"x", "z"});
  EXPECT_THROW(poly(a, "x") + poly(b, "x"), ContextMismatch);
  auto c = ring({"x", "y"});
  EXPECT_NO_THROW(poly(a, "x") + poly(c, "y"));
}

TEST(PolyArith, RingAxiomsAgainstNaiveArithmetic) {
  auto r = ring({"x", "y", "z"});
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial a = random_poly(rng, r, 4, 6);
    Polynomial b = random_poly(rng, r, 4, 6);
    Polynomial c = random_poly(rng, r, 3, 4);
    EXPECT_EQ(naive(a + b), naive_add(naive(a), naive(b)));
    EXPECT_EQ(naive(a - b), naive_add(naive(a), naive(b), -1));
    EXPECT_EQ(naive(a * b), naive_mul(naive(a), naive(b)));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(PolyArith, TermsStayCanonical) {
  auto r = ring({"x", "y", "z"});
  std::mt19937_64 rng(5);
  const auto ord = r->default_order();
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial p = random_poly(rng, r, 5, 8) * random_poly(rng, r, 3, 5);
    for (std::size_t i = 0; i < p.size(); ++i) {
      EXPECT_NE(p.terms()[i].coeff, 0);
      if (i + 1 < p.size()) {
        EXPECT_EQ(ord->compare(p.terms()[i].mono, p.terms()[i + 1].mono),
                  std::strong_ordering::greater);
      }
    }
  }
}

TEST(PolyArith, CoefficientsAreArbitraryPrecision) {
  auto r = ring({"x"});
  Polynomial p = poly(r, "(2*x + 3)^80");
  mpz_class expect;
  mpz_ui_pow_ui(expect.get_mpz_t(), 3, 80);
  EXPECT_EQ(evaluate(p, {mpq_class(0)}), mpq_class(expect));
}

TEST(MonomialOrder, CompareExamples) {
  auto r = ring({"x", "y", "z"});
  auto lex3 = MonomialOrder::lex(3);
  auto grevlex3 = MonomialOrder::grevlex(3);
  EXPECT_EQ(compare(Monomial{2, 0, 0}, Monomial{1, 3, 0}, lex3), std::strong_ordering::greater);
  EXPECT_EQ(compare(Monomial{1, 2, 1}, Monomial{2, 0, 1}, grevlex3), std::strong_ordering::greater);
  for (const auto& o : orders_for(3)) {
    EXPECT_EQ(o->compare(Monomial{1, 1, 2}, Monomial{1, 1, 2}), std::strong_ordering::equal);
  }
}

TEST(MonomialOrder, GrevlexTieBreak) {
  // Equal degree: the smaller exponent in the last variable wins.
  auto o = MonomialOrder::grevlex(3);
  EXPECT_EQ(compare(Monomial{1, 1, 0}, Monomial{1, 0, 1}, o), std::strong_ordering::greater);
  EXPECT_EQ(compare(Monomial{0, 2, 0}, Monomial{1, 0, 1}, o), std::strong_ordering::greater);
}

TEST(MonomialOrder, Properties) {
  std::mt19937_64 rng(3);
  for (std::size_t n : {2u, 3u, 4u}) {
    const Monomial one(n);
    for (const auto& o : orders_for(n)) {
      for (int trial = 0; trial < 300; ++trial) {
        Monomial a = random_monomial(rng, n, 4);
        Monomial b = random_monomial(rng, n, 4);
        Monomial c = random_monomial(rng, n, 3);
        const auto ab = o->compare(a, b);
        EXPECT_EQ(ab, o->compare(a * c, b * c));
        EXPECT_EQ(ab == std::strong_ordering::equal, a == b);
        EXPECT_EQ(o->compare(b, a), 0 <=> ab);
        if (!a.is_one()) EXPECT_EQ(o->compare(a, one), std::strong_ordering::greater);
      }
    }
  }
}

TEST(MonomialOrder, BlockOrderEliminatesFront) {
  std::mt19937_64 rng(8);
  const std::size_t n = 4;
  auto o = MonomialOrder::elimination(n, {1, 3});
  for (int trial = 0; trial < 500; ++trial) {
    Monomial a = random_monomial(rng, n, 3);
    Monomial b = random_monomial(rng, n, 5);
    const bool a_front = a[1] > 0 || a[3] > 0;
    const bool b_front = b[1] > 0 || b[3] > 0;
    if (a_front && !b_front) EXPECT_EQ(o.compare(a, b), std::strong_ordering::greater);
  }
  EXPECT_THROW(MonomialOrder::from_blocks(3, {{{0, 1}, BaseOrder::lex}}), PreconditionError);
}

TEST(LeadingTerm, Examples) {
  auto r = ring({"x", "y", "z"});
  auto lx = lex(3);
  const Polynomial p1 = poly(r, "x^2 - y").with_order(lx);
  const auto& lt = p1.leading_term();
  EXPECT_EQ(lt.coeff, 1);
  EXPECT_EQ(lt.mono, (Monomial{2, 0, 0}));
  const Polynomial p2 = poly(r, "3*y^3 - z^2").with_order(lx);
  const auto& lt2 = p2.leading_term();
  EXPECT_EQ(lt2.coeff, 3);
  EXPECT_EQ(lt2.mono, (Monomial{0, 3, 0}));
  auto yx = ring({"y", "x"});
  EXPECT_EQ(poly(yx, "x + y").leading_monomial(), (Monomial{1, 0}));
  EXPECT_THROW(Polynomial(r).leading_term(), PreconditionError);
}

TEST(Parse, Examples) {
  auto r = ring({"x", "y", "z"});
  EXPECT_EQ(poly(r, "x^2 - 2*x*y + 1").size(), 3u);
  Polynomial p = poly(r, "(z+1)^100 + 1");
  EXPECT_EQ(p.total_degree(), 100);
  ASSERT_EQ(p.size(), 101u);
  for (const auto& t : p.terms()) {
    const unsigned k = static_cast<unsigned>(t.mono[2]);
    mpq_class expect = mpq_class(binomial(100, k)) + (k == 0 ? 1 : 0);
    EXPECT_EQ(t.coeff, expect) << "z^" << k;
  }
  auto xy = ring({"x", "y"});
  EXPECT_THROW(poly(xy, "x + w"), ParseError);
}

TEST(Parse, Grammar) {
  auto r = ring({"x", "y"});
  EXPECT_EQ(poly(r, "7/2*x"), poly(r, "x*7/2"));
  EXPECT_EQ(poly(r, "-3"), Polynomial::constant(r, Coeff(-3)));
  EXPECT_EQ(poly(r, "  x *  y ^ 2 "), poly(r, "x*y^2"));
  EXPECT_EQ(poly(r, "-(x - y)^2"), poly(r, "-x^2 + 2*x*y - y^2"));
  EXPECT_EQ(poly(r, "4/6"), Polynomial::constant(r, Coeff(2, 3)));
}

TEST(Parse, ErrorsCarryPositions) {
  auto r = ring({"x", "y"});
  try {
    poly(r, "x y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(poly(r, "x^"), ParseError);
  EXPECT_THROW(poly(r, "1/0"), ParseError);
  EXPECT_THROW(poly(r, "x^99999999999"), ParseError);
  EXPECT_THROW(poly(r, "(x + y"), ParseError);
  EXPECT_THROW(poly(r, ""), ParseError);
  EXPECT_THROW(poly(r, "x^-1"), ParseError);
}

TEST(Parse, ExponentOverflowIsRejected) {
  auto r = ring({"x"});
  Polynomial p = poly(r, "x^2147483647");
  EXPECT_THROW(p * poly(r, "x"), PreconditionError);
}

TEST(Parse, FormatRoundTrip) {
  auto r = ring({"x", "y", "z"});
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial p = random_poly(rng, r, 5, 7).scaled(Coeff(rng() % 5 + 1, rng() % 3 + 1));
    EXPECT_EQ(poly(r, format_poly(p)), p);
  }
  EXPECT_EQ(format_poly(poly(r, "x^2 - 2*x*y + 1")), "x^2 - 2*x*y + 1");
  EXPECT_EQ(format_poly(Polynomial(r)), "0");
  EXPECT_EQ(format_poly(poly(r, "-x + 7/2*y")), "-x + 7/2*y");
}
