#include <gtest/gtest.h>

#include "hwprobe/error.hpp"
#include "support/fixtures.hpp"

using namespace hwprobe;
using namespace hwprobe::testing;

TEST(DefineRing, A1ThreefoldIsThreeDimensionalHypersurface) {
  A1Threefold a;
  EXPECT_EQ(a.r->dimension(), 3);
  EXPECT_TRUE(a.r->isHypersurface());
  EXPECT_TRUE(a.r->isGorenstein());
}

TEST(DefineRing, CuspIsOneDimensional) {
  Cusp c;
  EXPECT_EQ(c.r->dimension(), 1);
  EXPECT_TRUE(c.r->isHypersurface());
  EXPECT_EQ(c.r->domainScan(), DomainScan::Irreducible);
}

TEST(DefineRing, PolynomialRingInOneVariable) {
  auto s = makeRing(5, {"x"});
  auto r = quotientRing(s, {});
  EXPECT_TRUE(r->isPolynomialRing());
  EXPECT_EQ(r->dimension(), 1);
}

TEST(DefineRing, InhomogeneousIdealRejected) {
  auto s = makeRing(7, {"x", "y"});
  EXPECT_THROW(quotientRing(s, {"x^2 - y"}), InputError);
}

TEST(DefineRing, DomainAssertionContradictedByFactorization) {
  auto s = makeRing(7, {"x", "y"});
  EXPECT_THROW(quotientRing(s, {"x*y"}, true), InputError);
}

TEST(Present, QuotientOfA1Threefold) {
  A1Threefold a;
  EXPECT_EQ(a.m.numGenerators(), 1);
  EXPECT_EQ(a.m.numRelations(), 2);
  EXPECT_EQ(a.m.presentation().toString(), matrixOf(a.s, {0}, {{"x", "z"}}).toString());
}

TEST(Present, FreeModuleHasEmptyPresentation) {
  A1Threefold a;
  auto f = PresentedModule::freeModule(a.r, {0, 0});
  EXPECT_EQ(f.numGenerators(), 2);
  EXPECT_EQ(f.numRelations(), 0);
  EXPECT_TRUE(f.isFree());
}

TEST(Present, GasharovPeevaCokernelKeepsItsPresentation) {
  GasharovPeeva gp;
  auto n = PresentedModule::present(gp.r, gp.d(1));
  EXPECT_EQ(n.numGenerators(), 2);
  EXPECT_EQ(n.presentation(), gp.d(1));
}

TEST(Minimalize, UnitEntryCancelsEverything) {
  auto s = makeRing(101, {"x", "y"});
  auto r = quotientRing(s, {});
  auto m = PresentedModule::present(r, matrixOf(s, {0}, {{"1"}}));
  EXPECT_TRUE(m.isZero());
  EXPECT_EQ(m.numRelations(), 0);
}

TEST(Minimalize, DiagonalUnitIsSplitOff) {
  auto s = makeRing(101, {"x", "y"});
  auto r = quotientRing(s, {});
  auto m = PresentedModule::present(r, matrixOf(s, {0, 1}, {{"x", "0"}, {"0", "1"}}));
  EXPECT_EQ(m.presentation().toString(), matrixOf(s, {0}, {{"x"}}).toString());
}

TEST(Minimalize, HilbertFunctionPreserved) {
  auto s = makeRing(101, {"x", "y", "z"});
  auto r = quotientRing(s, {});
  Matrix p = matrixOf(s, {0, 0, 1}, {{"x", "y^2", "z"}, {"y", "x*z", "x"}, {"1", "z", "0"}});
  std::vector<int> kept;
  auto m = PresentedModule::present(r, p, &kept);
  EXPECT_EQ(m.numGenerators(), 2);
  EXPECT_EQ(m.numRelations(), 2);
  Subquotient raw{r, p.target(), {}, {}};
  for (int i = 0; i < p.rows(); ++i) raw.numerator.push_back(p.target().basis(i));
  raw.denominator = p.columns();
  EXPECT_EQ(raw.hilbertSeries(), m.hilbertSeries());
}

TEST(Resolution, ResidueFieldOfLine) {
  auto s = makeRing(5, {"x"});
  auto r = quotientRing(s, {});
  auto k = PresentedModule::quotient(r, polys(*s, {"x"}));
  auto res = minimalFreeResolution(k, 3);
  ASSERT_GE(res.differentials.size(), 1u);
  EXPECT_EQ(res.differentials[0].toString(), matrixOf(s, {0}, {{"x"}}).toString());
  EXPECT_EQ(res.betti(), (std::vector<int>{1, 1, 0, 0}));
  EXPECT_EQ(res.differentials[1].cols(), 0);
}

TEST(Resolution, A1ThreefoldQuotientBetti) {
  A1Threefold a;
  auto b = bettiNumbers(a.m, 6);
  EXPECT_EQ(b, (std::vector<int>{1, 2, 2, 2, 2, 2, 2}));
  auto res = minimalFreeResolution(a.m, 6);
  EXPECT_TRUE(res.isMinimal());
  EXPECT_TRUE(res.isComplex(*a.r));
}

TEST(Resolution, GasharovPeevaAllBettiTwo) {
  GasharovPeeva gp;
  auto n = PresentedModule::present(gp.r, gp.d(1));
  auto res = minimalFreeResolution(n, 6);
  EXPECT_EQ(res.betti(), (std::vector<int>{2, 2, 2, 2, 2, 2, 2}));
  EXPECT_TRUE(res.isComplex(*gp.r));
  EXPECT_EQ(complexityEstimate(n, 6).kind, ComplexityClass::Bounded);
}

TEST(Resolution, ComplexityClasses) {
  Cusp c;
  auto est = complexityEstimate(c.k, 6);
  EXPECT_EQ(est.kind, ComplexityClass::Bounded);
  EXPECT_EQ(est.betti, (std::vector<int>{1, 2, 2, 2, 2, 2, 2}));
  auto f = complexityEstimate(PresentedModule::freeModule(c.r, {0}), 6);
  EXPECT_EQ(f.kind, ComplexityClass::PdFinite);
  EXPECT_EQ(f.projectiveDimension, 0);
}

TEST(Syzygy, ZerothSyzygyIsTheModule) {
  A1Threefold a;
  EXPECT_EQ(syzygyModule(a.m, 0).presentation(), a.m.presentation());
}

TEST(Syzygy, FirstSyzygyOfResidueFieldOfLineIsFree) {
  auto s = makeRing(5, {"x"});
  auto r = quotientRing(s, {});
  auto k = PresentedModule::quotient(r, polys(*s, {"x"}));
  auto o = syzygyModule(k, 1);
  EXPECT_TRUE(o.isFree());
  EXPECT_EQ(o.generatorDegrees(), (std::vector<int>{1}));
}

TEST(Syzygy, FourthSyzygyOfGasharovPeevaReturnsToN) {
  GasharovPeeva gp;
  auto n = PresentedModule::present(gp.r, gp.d(1));
  auto res = isIsomorphic(n, syzygyModule(n, 4), {.allowTwist = true});
  EXPECT_EQ(res.verdict, IsoVerdict::Iso);
  EXPECT_EQ(res.twist, -4);
}

TEST(Hom, HomFromRingIsTheModule) {
  A1Threefold a;
  auto h = hom(PresentedModule::freeModule(a.r, {0}), a.n);
  EXPECT_EQ(isIsomorphic(a.n, h).verdict, IsoVerdict::Iso);
}

TEST(Hom, DualOfFiniteLengthModuleIsZero) {
  Cusp c;
  EXPECT_TRUE(dual(c.k).isZero());
}

TEST(Hom, DualOfA1QuotientVanishes) {
  // R/(x,z) is torsion over the domain R, so it has no nonzero maps to R.
  A1Threefold a;
  EXPECT_TRUE(dual(a.m).isZero());
  auto o = syzygyModule(a.m, 1);
  auto od = dual(o);
  EXPECT_EQ(rank(od), rank(o));
  EXPECT_EQ(rank(o), 1);
}

TEST(Transpose, FreeModuleGivesZero) {
  A1Threefold a;
  EXPECT_TRUE(transpose(PresentedModule::freeModule(a.r, {0, 1})).isZero());
}

TEST(Transpose, ResidueFieldOfLine) {
  auto s = makeRing(5, {"x"});
  auto r = quotientRing(s, {});
  auto k = PresentedModule::quotient(r, polys(*s, {"x"}));
  auto tr = transpose(k);
  ASSERT_EQ(tr.numGenerators(), 1);
  EXPECT_EQ(tr.generatorDegrees(), (std::vector<int>{-1}));
  EXPECT_EQ(len(tr), 1);
}

TEST(Transpose, Tor1AgainstTransposeDetectsNonfreeness) {
  A1Threefold a;
  EXPECT_FALSE(torSubquotient(a.m, transpose(a.m), 1).isZero());
}

TEST(Tensor, WithRingIsIdentity) {
  A1Threefold a;
  auto t = tensor(a.m, PresentedModule::freeModule(a.r, {0}));
  EXPECT_EQ(isIsomorphic(a.m, t).verdict, IsoVerdict::Iso);
}

TEST(Tensor, QuotientsAddIdeals) {
  A1Threefold a;
  auto t = tensor(a.m, a.n);
  auto expected = PresentedModule::quotient(a.r, polys(*a.s, {"x", "y", "z"}));
  EXPECT_EQ(isIsomorphic(expected, t).verdict, IsoVerdict::Iso);
  EXPECT_EQ(hilbertFunction(t, 0, 5), (std::vector<std::int64_t>{1, 1, 1, 1, 1, 1}));
}

TEST(Tor, ZerothTorIsTensor) {
  A1Threefold a;
  EXPECT_EQ(torSubquotient(a.m, a.n, 0).hilbertSeries(), tensor(a.m, a.n).hilbertSeries());
}

TEST(Tor, A1ThreefoldVanishingPattern) {
  A1Threefold a;
  EXPECT_EQ(len(torSubquotient(a.m, a.n, 2)), 0);
  EXPECT_EQ(len(torSubquotient(a.m, a.n, 3)), 1);
}

TEST(Tor, ResidueFieldOfLine) {
  auto s = makeRing(5, {"x"});
  auto r = quotientRing(s, {});
  auto k = PresentedModule::quotient(r, polys(*s, {"x"}));
  EXPECT_EQ(len(torSubquotient(k, k, 1)), 1);
  EXPECT_EQ(len(torSubquotient(k, k, 2)), 0);
}

TEST(Ext, FreeFirstArgumentHasNoHigherExt) {
  Cusp c;
  auto r = PresentedModule::freeModule(c.r, {0});
  for (int i = 1; i <= 3; ++i) EXPECT_TRUE(extSubquotient(r, c.k, i).isZero()) << i;
}

TEST(Ext, CuspMaximalIdealSelfExt) {
  Cusp c;
  EXPECT_GT(len(extSubquotient(c.m, c.m, 1)), 0);
}

TEST(Ext, MaximalCohenMacaulayIsTotallyReflexive) {
  Cusp c;
  auto r = PresentedModule::freeModule(c.r, {0});
  for (int i = 1; i <= 3; ++i) EXPECT_TRUE(extSubquotient(c.m, r, i).isZero()) << i;
}

TEST(Hilbert, LengthOfTruncatedLine) {
  auto s = makeRing(5, {"x"});
  auto r = quotientRing(s, {});
  EXPECT_EQ(len(PresentedModule::quotient(r, polys(*s, {"x^3"}))), 3);
}

TEST(Hilbert, PolynomialRingInTwoVariables) {
  auto s = makeRing(101, {"x", "y"});
  auto r = quotientRing(s, {});
  auto f = PresentedModule::freeModule(r, {0});
  EXPECT_EQ(hilbertFunction(f, 0, 6), (std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7}));
  EXPECT_FALSE(length(f).has_value());
}

TEST(Hilbert, A1ThirdTorHasLengthOne) {
  A1Threefold a;
  EXPECT_EQ(len(tor(a.m, a.n, 3)), 1);
}

TEST(KrullDim, Values) {
  A1Threefold a;
  EXPECT_EQ(krullDim(PresentedModule::freeModule(a.r, {0})), 3);
  EXPECT_EQ(krullDim(a.m), 2);
  Cusp c;
  EXPECT_EQ(krullDim(c.k), 0);
}

TEST(Depth, Values) {
  auto s = makeRing(101, {"x", "y"});
  auto r = quotientRing(s, {});
  EXPECT_EQ(depth(PresentedModule::freeModule(r, {0})), 2);
  EXPECT_EQ(depth(PresentedModule::quotient(r, polys(*s, {"x", "y"}))), 0);
  A1Threefold a;
  EXPECT_EQ(depth(PresentedModule::freeModule(a.r, {0})), 3);
}

TEST(Grade, Values) {
  auto s = makeRing(101, {"x", "y"});
  auto r = quotientRing(s, {});
  EXPECT_EQ(grade(PresentedModule::quotient(r, polys(*s, {"x", "y"}))), 2);
  Cusp c;
  EXPECT_EQ(grade(c.m), 0);
  A1Threefold a;
  EXPECT_EQ(grade(a.m), 1);
  EXPECT_EQ(grade(a.m), a.r->dimension() - krullDim(a.m));
}

TEST(Rank, Values) {
  Cusp c;
  EXPECT_EQ(rank(PresentedModule::freeModule(c.r, {0, 0})), 2);
  EXPECT_EQ(rank(c.k), 0);
  EXPECT_EQ(rank(c.m), 1);
  EXPECT_EQ(rankByMinors(c.m), 1);
}

TEST(Rank, RequiresDomain) {
  GasharovPeeva gp;
  EXPECT_THROW(rank(PresentedModule::present(gp.r, gp.d(1))), HypothesisError);
}

TEST(Torsion, FreeModuleIsTorsionFree) {
  Cusp c;
  EXPECT_TRUE(torsionSubmodule(PresentedModule::freeModule(c.r, {0})).isZero());
}

TEST(Torsion, CyclicQuotientOfCuspIsAllTorsion) {
  Cusp c;
  auto q = PresentedModule::quotient(c.r, polys(*c.s, {"x"}));
  auto t = torsionSubmodule(q);
  EXPECT_EQ(len(t), 3);
  EXPECT_EQ(t.hilbertSeries().values(0, 6), (std::vector<std::int64_t>{1, 0, 1, 0, 1, 0, 0}));
  EXPECT_EQ(len(torsionByBiduality(q)), 3);
}

TEST(Torsion, CuspTensorWithDualHasTorsion) {
  Cusp c;
  auto t = tensor(c.m, dual(c.m));
  EXPECT_GT(len(torsionSubmodule(t)), 0);
  EXPECT_EQ(len(torsionBySaturation(t)), len(torsionByBiduality(t)));
}

TEST(Torsion, RequiresDomain) {
  GasharovPeeva gp;
  EXPECT_THROW(torsionSubmodule(PresentedModule::present(gp.r, gp.d(1))), HypothesisError);
}

TEST(Isomorphism, ModuleIsIsomorphicToItself) {
  A1Threefold a;
  auto res = isIsomorphic(a.m, a.m);
  EXPECT_EQ(res.verdict, IsoVerdict::Iso);
  ASSERT_TRUE(res.certificate.has_value());
  EXPECT_TRUE(verifyIsoCertificate(a.m, a.m, *res.certificate));
}

TEST(Isomorphism, GasharovPeevaCokernels) {
  GasharovPeeva gp;
  auto n = PresentedModule::present(gp.r, gp.d(1));
  auto c5 = PresentedModule::present(gp.r, gp.d(5));
  auto same = isIsomorphic(n, c5, {.allowTwist = true});
  EXPECT_EQ(same.verdict, IsoVerdict::Iso);
  ASSERT_TRUE(same.certificate.has_value());
  EXPECT_TRUE(verifyIsoCertificate(n.twisted(same.twist), c5, *same.certificate));
  auto other = isIsomorphic(n, PresentedModule::present(gp.r, gp.d(2)), {.allowTwist = true});
  EXPECT_EQ(other.verdict, IsoVerdict::NotIso);
}

TEST(Isomorphism, DifferentHilbertSeriesAreNotIsomorphic) {
  A1Threefold a;
  auto res = isIsomorphic(a.m, PresentedModule::freeModule(a.r, {0}), {.allowTwist = true});
  EXPECT_EQ(res.verdict, IsoVerdict::NotIso);
}

TEST(NonfreeLocus, Values) {
  Cusp c;
  EXPECT_EQ(nonfreeLocusDim(PresentedModule::freeModule(c.r, {0})), -1);
  EXPECT_EQ(nonfreeLocusDim(c.m), 0);
  A1Threefold a;
  EXPECT_EQ(nonfreeLocusDim(syzygyModule(a.m, 3)), 0);
  EXPECT_EQ(nonfreeLocusDim(a.m), 2);
}

TEST(Colon, SaturationStripsVariable) {
  auto s = makeRing(101, {"x", "y"});
  auto r = quotientRing(s, {});
  FreeModule line(s, {0});
  auto sat = colonSaturate(*r, line, {element(line, {"x^2*y"})}, polys(*s, {"y"}));
  std::vector<Vec> x2{element(line, {"x^2"})};
  EXPECT_TRUE((Subquotient{r, line, sat, x2}).isZero());
  EXPECT_TRUE((Subquotient{r, line, x2, sat}).isZero());
}

TEST(Colon, NilpotentSaturatesToEverything) {
  auto s = makeRing(101, {"x"});
  auto r = quotientRing(s, {"x^2"});
  FreeModule line(s, {0});
  auto sat = colonSaturate(*r, line, {}, polys(*s, {"x"}));
  Subquotient q{r, line, {line.basis(0)}, sat};
  EXPECT_TRUE(q.isZero());
}

TEST(Colon, FreeModuleByMaximalIdeal) {
  auto s = makeRing(101, {"x", "y"});
  auto r = quotientRing(s, {});
  FreeModule line(s, {0});
  auto c = colon(*r, line, {line.basis(0)}, polys(*s, {"x", "y"}));
  Subquotient q{r, line, {line.basis(0)}, c};
  EXPECT_TRUE(q.isZero());
}

TEST(GasharovPeevaIdeal, LiteralGeneratorListDoesNotGiveAComplex) {
  auto s = makeRing(5, {"x1", "x2", "x3", "x4"});
  auto r = quotientRing(s, {"x1^2 - x2^2", "x3^2", "x4^2", "x3*x4", "x1*x4 + x2*x4",
                            "2*x1*x3 + x2*x3"});
  GasharovPeeva gp;
  Matrix prod = gp.d(1) * gp.d(2);
  EXPECT_FALSE(r->isZero(prod.at(0, 0)));
  EXPECT_EQ(r->dimension(), 1);
}

TEST(GasharovPeevaIdeal, SevenQuadricsGiveAnExactComplex) {
  GasharovPeeva gp;
  EXPECT_EQ(gp.r->dimension(), 0);
  auto one = PresentedModule::freeModule(gp.r, {0});
  for (int n = 1; n <= 8; ++n) {
    Matrix prod = gp.d(n) * gp.d(n + 1);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) EXPECT_TRUE(gp.r->isZero(prod.at(i, j))) << n;
    EXPECT_TRUE(homologyAt(gp.r, {n, n}, gp.d(n + 1), gp.d(n), one).isZero()) << n;
  }
}
