#include <gtest/gtest.h>

#include <random>

#include "hwprobe/error.hpp"
#include "hwprobe/polynomial.hpp"

using namespace hwprobe;

namespace {

PolyRingPtr makeRing(std::uint32_t p, std::vector<std::string> names,
                     std::vector<int> weights) {
  return std::make_shared<const PolyRing>(PrimeField(p), std::move(names),
                                          std::move(weights));
}

}  // namespace

TEST(PolyArith, CancellationLeavesY) {
  auto r = makeRing(5, {"x", "y"}, {1, 1});
  auto f = Polynomial::parse(r, "x + y");
  auto g = Polynomial::parse(r, "4*x");
  EXPECT_EQ((f + g).toString(), "y");
}

TEST(PolyArith, DifferenceOfSquares) {
  auto r = makeRing(7, {"x", "y"}, {1, 1});
  auto f = Polynomial::parse(r, "(x+y)*(x-y)");
  EXPECT_EQ(f, Polynomial::parse(r, "x^2 - y^2"));
  EXPECT_EQ(f.toString(), "x^2 - y^2");
  EXPECT_EQ((Polynomial::parse(r, "x") * Polynomial::parse(r, "x")).toString(), "x^2");
}

TEST(PolyArith, RingMismatchThrows) {
  auto r1 = makeRing(7, {"x", "y"}, {1, 1});
  auto r2 = makeRing(7, {"x", "y"}, {1, 1});
  EXPECT_THROW(Polynomial::parse(r1, "x") + Polynomial::parse(r2, "x"), InputError);
}

TEST(LeadingTerm, WeightedTieBrokenByOrder) {
  auto r = makeRing(7, {"x", "y"}, {3, 2});
  auto f = Polynomial::parse(r, "x^2 + y^3");
  Term t = leadingTerm(f, OrderKind::WeightedRevLex);
  EXPECT_EQ(r->toString(t.mono), "x^2");
  EXPECT_EQ(t.mono.degree, 6);
  EXPECT_EQ(r->toString(leadingTerm(Polynomial::parse(r, "x"), OrderKind::Lex).mono), "x");
  EXPECT_THROW(leadingTerm(Polynomial::parse(r, "0"), OrderKind::Lex), InputError);
}

TEST(LeadingTerm, HigherDegreeWins) {
  auto r = makeRing(7, {"x", "y"}, {1, 1});
  Term t = leadingTerm(Polynomial::parse(r, "y^5 + x"), OrderKind::WeightedRevLex);
  EXPECT_EQ(r->toString(t.mono), "y^5");
}

TEST(WeightedDegree, DotProduct) {
  auto r1 = makeRing(7, {"x", "y"}, {1, 1});
  auto r2 = makeRing(7, {"x", "y"}, {3, 2});
  EXPECT_EQ(r1->weightedDegree(r1->monomial(std::vector<int>{2, 1})), 3);
  EXPECT_EQ(r2->weightedDegree(r2->variable(0, 2)), 6);
  EXPECT_EQ(r2->weightedDegree(r2->variable(1, 3)), 6);
}

TEST(TermDivide, Examples) {
  auto r = makeRing(5, {"x", "y"}, {1, 1});
  Term x2y{r->monomial(std::vector<int>{2, 1}), 1};
  Term xy{r->monomial(std::vector<int>{1, 1}), 1};
  auto q = termDivide(*r, x2y, xy);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(r->toString(q->mono), "x");
  EXPECT_FALSE(termDivide(*r, Term{r->variable(0), 1}, Term{r->variable(1), 1}));
  auto q2 = termDivide(*r, Term{r->variable(0, 2), 3}, Term{r->variable(0), 2});
  ASSERT_TRUE(q2.has_value());
  EXPECT_EQ(q2->coef, 4u);
  EXPECT_EQ(r->toString(q2->mono), "x");
}

TEST(Parser, ReportsOffendingToken) {
  auto r = makeRing(7, {"x", "y"}, {1, 1});
  try {
    parsePoly(*r, "x + * y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.token(), "*");
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(parsePoly(*r, "x + q"), ParseError);
  EXPECT_THROW(parsePoly(*r, "(x + y"), ParseError);
}

TEST(Parser, ReducesCoefficients) {
  auto r = makeRing(7, {"x", "y"}, {1, 1});
  EXPECT_TRUE(parsePoly(*r, "7*x").isZero());
  EXPECT_EQ(r->toString(parsePoly(*r, "-(x - 2*y)^2")), "-x^2 - 3*x*y + 3*y^2");
}

TEST(OrderLaws, RandomMonomials) {
  std::mt19937 rng(11);
  auto r = makeRing(7, {"a", "b", "c", "d"}, {1, 2, 3, 1});
  std::uniform_int_distribution<int> e(0, 4);
  auto rand = [&] {
    std::vector<int> v(4);
    for (auto& x : v) x = e(rng);
    return r->monomial(v);
  };
  for (OrderKind k : {OrderKind::WeightedRevLex, OrderKind::Lex}) {
    for (int i = 0; i < 300; ++i) {
      Monomial u = rand(), v = rand(), w = rand();
      int c = compareMonomials(k, u, v);
      EXPECT_EQ(c, -compareMonomials(k, v, u));
      EXPECT_EQ(compareMonomials(k, u * w, v * w), c);
      if (c > 0 && compareMonomials(k, v, w) > 0) EXPECT_GT(compareMonomials(k, u, w), 0);
      EXPECT_EQ(r->weightedDegree(u * v), r->weightedDegree(u) + r->weightedDegree(v));
    }
  }
}

TEST(Homogeneity, ProductDegreesAdd) {
  auto r = makeRing(101, {"x", "y", "z"}, {3, 2, 1});
  Poly f = parsePoly(*r, "x^2 + y^3 - 5*z^6 + x*y*z");
  Poly g = parsePoly(*r, "y + z^2");
  ASSERT_TRUE(r->isHomogeneous(f));
  ASSERT_TRUE(r->isHomogeneous(g));
  Poly h = r->mul(f, g);
  EXPECT_TRUE(r->isHomogeneous(h));
  EXPECT_EQ(r->degree(h), 8);
  EXPECT_FALSE(r->isHomogeneous(parsePoly(*r, "x + y")));
}
