#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"

using namespace hwprobe;
using namespace hwprobe::testing;

namespace {

Poly randomForm(const PolyRing& s, int degree, std::mt19937_64& rng) {
  std::vector<Term> terms;
  std::uniform_int_distribution<std::int64_t> coef(0, s.field().characteristic() - 1);
  std::bernoulli_distribution keep(0.5);
  for (const auto& m : s.monomialsOfDegree(degree))
    if (keep(rng)) terms.push_back({m, s.field().fromInt(coef(rng))});
  return s.normalize(std::move(terms));
}

std::vector<Poly> randomIdeal(const PolyRing& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 3), deg(1, 2);
  std::vector<Poly> out;
  int n = count(rng);
  while (static_cast<int>(out.size()) < n) {
    Poly p = randomForm(s, deg(rng), rng);
    if (!p.isZero()) out.push_back(std::move(p));
  }
  return out;
}

/// Catalog-style modules used by the structural suites.
std::vector<std::pair<std::string, PresentedModule>> catalogModules() {
  std::vector<std::pair<std::string, PresentedModule>> out;
  Cusp c;
  out.push_back({"cusp k", c.k});
  out.push_back({"cusp m", c.m});
  out.push_back({"cusp R/(x)", PresentedModule::quotient(c.r, polys(*c.s, {"x"}))});
  for (const auto& cc : curves()) out.push_back({cc.name + " m", cc.m});
  A1Threefold a;
  out.push_back({"a1 M", a.m});
  out.push_back({"a1 N", a.n});
  out.push_back({"a1 Omega3 M", syzygyModule(a.m, 3)});
  A1Surface b;
  out.push_back({"a1 surface M", b.m});
  return out;
}

}  // namespace

TEST(Property, HilbertSeriesAdditiveOnDirectSums) {
  std::mt19937_64 rng(7);
  auto s = makeRing(31, {"x", "y", "z"});
  auto r = quotientRing(s, {"x*z - y^2"});
  for (int trial = 0; trial < 12; ++trial) {
    auto a = PresentedModule::quotient(r, randomIdeal(*s, rng));
    auto b = PresentedModule::quotient(r, randomIdeal(*s, rng), trial % 3);
    EXPECT_EQ(directSum(a, b).hilbertSeries(), a.hilbertSeries() + b.hilbertSeries()) << trial;
  }
}

TEST(Property, TorIsBalanced) {
  std::mt19937_64 rng(11);
  auto s = makeRing(31, {"x", "y", "z"});
  auto r = quotientRing(s, {"x*z - y^2"});
  for (int trial = 0; trial < 6; ++trial) {
    auto a = PresentedModule::quotient(r, randomIdeal(*s, rng));
    auto b = PresentedModule::quotient(r, randomIdeal(*s, rng));
    for (int i = 0; i <= 3; ++i) {
      auto ab = torSubquotient(a, b, i).length();
      auto ba = torSubquotient(b, a, i).length();
      if (ab && ba) EXPECT_EQ(*ab, *ba) << trial << " " << i;
      EXPECT_EQ(ab.has_value(), ba.has_value()) << trial << " " << i;
    }
  }
}

TEST(Property, FreeArgumentsHaveNoHigherTorOrExt) {
  std::mt19937_64 rng(13);
  auto s = makeRing(31, {"x", "y", "z"});
  auto r = quotientRing(s, {"x*z - y^2"});
  auto one = PresentedModule::freeModule(r, {0});
  for (int trial = 0; trial < 5; ++trial) {
    auto m = PresentedModule::quotient(r, randomIdeal(*s, rng));
    for (int i = 1; i <= 3; ++i) {
      EXPECT_TRUE(torSubquotient(m, one, i).isZero()) << trial << " " << i;
      EXPECT_TRUE(extSubquotient(one, m, i).isZero()) << trial << " " << i;
    }
  }
}

TEST(Property, ResolutionsAreMinimalComplexes) {
  std::mt19937_64 rng(17);
  auto s = makeRing(31, {"x", "y", "z"});
  auto r = quotientRing(s, {"x*z - y^2"});
  for (int trial = 0; trial < 6; ++trial) {
    auto m = PresentedModule::quotient(r, randomIdeal(*s, rng));
    auto res = minimalFreeResolution(m, 4);
    EXPECT_TRUE(res.isComplex(*r)) << trial;
    EXPECT_TRUE(res.isMinimal()) << trial;
  }
}

TEST(Property, BettiNumbersIndependentOfMonomialOrder) {
  std::mt19937_64 rng(19);
  auto s = makeRing(31, {"x", "y", "z"});
  auto lex = s->withOrder(OrderKind::Lex);
  auto r = quotientRing(s, {"x*z - y^2"});
  auto rl = quotientRing(lex, {"x*z - y^2"});
  for (int trial = 0; trial < 6; ++trial) {
    auto ideal = randomIdeal(*s, rng);
    std::vector<Poly> lexIdeal;
    for (const auto& p : ideal) lexIdeal.push_back(parsePoly(*lex, s->toString(p)));
    auto a = PresentedModule::quotient(r, ideal);
    auto b = PresentedModule::quotient(rl, lexIdeal);
    EXPECT_EQ(bettiNumbers(a, 4), bettiNumbers(b, 4)) << trial;
  }
}

TEST(Property, BettiNumbersIndependentOfGeneratorOrder) {
  std::mt19937_64 rng(23);
  auto s = makeRing(31, {"x", "y", "z"});
  auto r = quotientRing(s, {"x*z - y^2"});
  for (int trial = 0; trial < 6; ++trial) {
    auto ideal = randomIdeal(*s, rng);
    auto shuffled = ideal;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::reverse(shuffled.begin(), shuffled.end());
    EXPECT_EQ(bettiNumbers(PresentedModule::quotient(r, ideal), 4),
              bettiNumbers(PresentedModule::quotient(r, shuffled), 4))
        << trial;
  }
}

TEST(Property, AuslanderBuchsbaumOnPolynomialRing) {
  std::mt19937_64 rng(29);
  auto s = makeRing(31, {"x", "y", "z"});
  auto r = quotientRing(s, {});
  for (int trial = 0; trial < 8; ++trial) {
    auto m = PresentedModule::quotient(r, randomIdeal(*s, rng));
    auto est = complexityEstimate(m, 5);
    ASSERT_EQ(est.kind, ComplexityClass::PdFinite) << trial;
    EXPECT_EQ(depth(m) + est.projectiveDimension, 3) << trial;
  }
}

TEST(Property, GradeIsCodimensionForCohenMacaulayModules) {
  for (const auto& [name, m] : catalogModules()) {
    if (m.isZero() || depth(m) != krullDim(m)) continue;
    EXPECT_EQ(grade(m), m.ring().dimension() - krullDim(m)) << name;
  }
}

TEST(Property, TorsionAlgorithmsAgreeInDimensionOne) {
  for (const auto& [name, m] : catalogModules()) {
    if (m.ring().dimension() != 1) continue;
    auto sat = torsionBySaturation(m);
    auto bid = torsionByBiduality(m);
    EXPECT_EQ(sat.hilbertSeries(), bid.hilbertSeries()) << name;
    auto t = tensor(m, dual(m));
    EXPECT_EQ(torsionBySaturation(t).hilbertSeries(), torsionByBiduality(t).hilbertSeries())
        << name;
  }
}

TEST(Property, FreenessDetectedByTransposeTor) {
  for (const auto& [name, m] : catalogModules()) {
    if (m.isFree()) continue;
    EXPECT_FALSE(torSubquotient(m, transpose(m), 1).isZero()) << name;
  }
}

TEST(Property, DualIsSecondSyzygyOfTranspose) {
  for (const auto& [name, m] : catalogModules()) {
    if (m.isFree()) continue;
    auto lhs = trimFreeSummands(dual(m));
    auto rhs = trimFreeSummands(syzygyModule(transpose(m), 2));
    auto res = isIsomorphic(lhs, rhs, {.allowTwist = true});
    EXPECT_EQ(res.verdict, IsoVerdict::Iso) << name << ": " << res.reason;
  }
}

TEST(Property, IsomorphismReflexiveUnderRandomTwist) {
  std::mt19937_64 rng(31);
  auto s = makeRing(31, {"x", "y", "z"});
  auto r = quotientRing(s, {"x*z - y^2"});
  for (int trial = 0; trial < 5; ++trial) {
    auto m = PresentedModule::quotient(r, randomIdeal(*s, rng));
    int a = static_cast<int>(rng() % 5) - 2;
    auto res = isIsomorphic(m, m.twisted(a), {.allowTwist = true});
    EXPECT_EQ(res.verdict, IsoVerdict::Iso) << trial;
    EXPECT_EQ(res.twist, a) << trial;
  }
}
