#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hwprobe/module.hpp"

namespace hwprobe {

struct Resolution {
  std::vector<Matrix> differentials;  // d_1 .. d_t

  /// b_0 .. b_t.
  std::vector<int> betti() const;
  bool isMinimal() const;
  /// d_i d_{i+1} = 0 modulo I for every consecutive pair.
  bool isComplex(const QuotientRing& ring) const;
};

Resolution minimalFreeResolution(const PresentedModule& m, int length);

/// Omega^n M presented by d_{n+1}; Omega^0 M = M.
PresentedModule syzygyModule(const PresentedModule& m, int n);
/// Removes generators whose presentation row is zero; `count` receives how
/// many free summands were split off.
PresentedModule trimFreeSummands(const PresentedModule& m, int* count = nullptr);

PresentedModule directSum(const PresentedModule& a, const PresentedModule& b);
PresentedModule tensor(const PresentedModule& a, const PresentedModule& b);
/// Hom(M, N) as a subquotient of F0^* (x) G0 and as a module.
Subquotient homSubquotient(const PresentedModule& m, const PresentedModule& n);
PresentedModule hom(const PresentedModule& m, const PresentedModule& n);
PresentedModule dual(const PresentedModule& m);
PresentedModule transpose(const PresentedModule& m);

Subquotient torSubquotient(const PresentedModule& m, const PresentedModule& n, int i);
PresentedModule tor(const PresentedModule& m, const PresentedModule& n, int i);
Subquotient extSubquotient(const PresentedModule& m, const PresentedModule& n, int i);
PresentedModule ext(const PresentedModule& m, const PresentedModule& n, int i);

std::vector<std::int64_t> hilbertFunction(const PresentedModule& m, int lo, int hi);
/// std::nullopt when infinite.
std::optional<std::int64_t> length(const PresentedModule& m);
int krullDim(const PresentedModule& m);
/// Via Koszul homology on all ambient variables.
int depth(const PresentedModule& m);
int grade(const PresentedModule& m);
/// Rank over a domain from the Hilbert multiplicity.
int rank(const PresentedModule& m);
/// Rank from the largest nonvanishing minor; `minorBudget` caps the work.
std::optional<int> rankByMinors(const PresentedModule& m, std::size_t minorBudget = 20000);

/// Ideal of r x r minors of a matrix, reduced modulo I (zero minors dropped).
std::vector<Poly> minors(const QuotientRing& ring, const Matrix& p, int r,
                         std::size_t budget = 200000);
/// Fitt_j(M) together with I, as ideal generators of S.
std::vector<Poly> fittingIdeal(const PresentedModule& m, int j);
/// Krull dimension of S/J (-1 for the unit ideal).
int idealQuotientDim(const QuotientRing& ring, const std::vector<Poly>& j);
/// Dimension of V(Fitt_r(M)) with r = rank(M); -1 when empty.
int nonfreeLocusDim(const PresentedModule& m);

/// {v in F : J v in U + I F}.
std::vector<Vec> colon(const QuotientRing& ring, const FreeModule& f, const std::vector<Vec>& u,
                       const std::vector<Poly>& j);
/// U : J^infinity, iterating colon until the Hilbert series stabilizes.
std::vector<Vec> colonSaturate(const QuotientRing& ring, const FreeModule& f,
                               const std::vector<Vec>& u, const std::vector<Poly>& j);

/// 0 :_M m^infinity.
Subquotient torsionBySaturation(const PresentedModule& m);
/// ker(M -> M**).
Subquotient torsionByBiduality(const PresentedModule& m);
/// Requires an asserted domain; uses saturation in dimension 1 and
/// biduality otherwise.
Subquotient torsionSubmodule(const PresentedModule& m);

enum class IsoVerdict { Iso, NotIso, Undecided };
std::string toString(IsoVerdict v);

struct IsoOptions {
  bool allowTwist = false;
  int twistWindow = 12;
  std::size_t sampleBudget = 500;
  std::uint64_t seed = 1;
};

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Undecided;
  /// N is compared against M(twist).
  int twist = 0;
  /// Invertible degree-0 map M(twist) -> N on generators, when ISO.
  std::optional<Matrix> certificate;
  /// Distinguishing invariant or search summary.
  std::string reason;
  std::size_t samplesUsed = 0;
  int homDimension = 0;
};

IsoResult isIsomorphic(const PresentedModule& m, const PresentedModule& n,
                       const IsoOptions& options = {});
/// Checks that `phi` induces a well-defined surjection M(twist) -> N.
bool verifyIsoCertificate(const PresentedModule& m, const PresentedModule& n, const Matrix& phi);

enum class ComplexityClass { PdFinite, Bounded, PolynomialGrowth, Inconclusive };
std::string toString(ComplexityClass c);

struct ComplexityEstimate {
  ComplexityClass kind = ComplexityClass::Inconclusive;
  std::vector<int> betti;
  int projectiveDimension = -1;  // when pd-finite in the window
  int fittedDegree = -1;         // when polynomial growth
};

std::vector<int> bettiNumbers(const PresentedModule& m, int window);
/// Heuristic window estimate, never a proof.
ComplexityEstimate complexityEstimate(const PresentedModule& m, int window);

/// Koszul differential d_i : K_i -> K_{i-1} on all ambient variables.
Matrix koszulDifferential(const PolyRingPtr& ring, int i);

}  // namespace hwprobe
