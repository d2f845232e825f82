#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hwprobe/calculus.hpp"

namespace hwprobe {

/// Square matrices over the ambient ring with AB = BA = f I.
struct MatrixFactorization {
  QuotientRingPtr ring;
  Poly f;
  Matrix a;  // F1 -> F0, the lifted presentation
  Matrix b;  // F0(-deg f) -> F1

  int size() const { return a.rows(); }
  /// Recomputes both products over S.
  bool verify() const;
};

MatrixFactorization matrixFactorization(const PresentedModule& m);

/// Doubly infinite periodic complex ... -> T_i -> T_{i-1} -> ... stored as
/// one period of differentials d_start .. d_{start+period-1}. T_{i+period}
/// carries the twists of T_i raised by `shift`.
struct CompleteResolution {
  QuotientRingPtr ring;
  int period = 2;
  int start = 1;
  int shift = 0;
  std::vector<Matrix> maps;
  /// Resolution index where periodicity sets in.
  int agreesFrom = 0;
  /// Basis change used to close the period, when periodicity was detected.
  std::optional<Matrix> closingMap;
  bool fromFactorization = false;
  /// Residues checked for acyclicity of T and of Hom(T, R); by periodicity
  /// this covers every index in [-window, window].
  int window = 0;

  Matrix differential(int i) const;
  std::vector<int> degrees(int i) const;
};

/// Uses a matrix factorization for MCM modules over a hypersurface and
/// otherwise searches the minimal resolution for a period up to
/// `maxPeriod`, starting at most `window` steps in.
CompleteResolution completeResolution(const PresentedModule& m, int window = 10,
                                      int maxPeriod = 8);

Subquotient tateTorSubquotient(const CompleteResolution& t, const PresentedModule& n, int i);
Subquotient tateExtSubquotient(const CompleteResolution& t, const PresentedModule& n, int i);
PresentedModule tateTor(const CompleteResolution& t, const PresentedModule& n, int i);
PresentedModule tateExt(const CompleteResolution& t, const PresentedModule& n, int i);

/// M is isomorphic to Omega^q M up to twist.
IsoResult periodicityCheck(const PresentedModule& m, int q, const IsoOptions& options = {});

struct ThetaResult {
  int value = 0;
  /// n in len(Tor_2n) - len(Tor_2n-1).
  int stableIndex = 0;
  /// Tor indices at or below this one are not used (dim R).
  int replacementIndex = 0;
  /// Lengths of Tor_{2n-1}, Tor_{2n}, Tor_{2n+1}, Tor_{2n+2}.
  std::array<std::int64_t, 4> lengths{};
  /// Value at n + 1.
  int certificate = 0;
};

ThetaResult theta(const PresentedModule& m, const PresentedModule& n);

/// 0 -> X -> Y -> Z -> 0 with X given on generators inside Y.
struct ShortExactSequence {
  PresentedModule x;
  PresentedModule y;
  PresentedModule z;
  Matrix inclusion;  // generators of X as columns over Y's generators
};

/// X = submodule of Y generated by `elements`, Z = Y / X.
ShortExactSequence sequenceFromSubmodule(const PresentedModule& y, const std::vector<Vec>& elements);
/// 0 -> X -> X (+) Z -> Z -> 0.
ShortExactSequence splitSequence(const PresentedModule& x, const PresentedModule& z);
bool isExact(const ShortExactSequence& seq);

struct AdditivityResult {
  int thetaX = 0;
  int thetaY = 0;
  int thetaZ = 0;
  bool holds = false;
};

AdditivityResult thetaAdditivityCheck(const PresentedModule& m, const ShortExactSequence& seq);

struct RigidityReport {
  int window = 0;
  std::vector<std::optional<std::int64_t>> lengths;  // Tor_0 .. Tor_W
  /// Indices n >= 1 with Tor_n = 0 and a later nonzero Tor.
  std::vector<int> gaps;
  bool periodic = false;
  /// 1-dimensional asserted domain and M isomorphic to Omega^2 M.
  bool hypothesesHold = false;
  bool anomaly = false;
};

RigidityReport rigidityProbe(const PresentedModule& m, const PresentedModule& n, int window);

enum class HwVerdict { ConjectureHolds, CounterexampleCandidate };
std::string toString(HwVerdict v);

struct HwCheckResult {
  std::int64_t torsionLength = 0;
  std::int64_t torsionLengthBiduality = 0;
  bool tateChecked = false;
  bool tateNonzero = false;
  bool extChecked = false;
  bool extNonzero = false;
  IsoVerdict periodic = IsoVerdict::Undecided;
  int periodicTwist = 0;
  bool detectorsAgree = true;
  bool recheckPerformed = false;
  int degreeBound = 0;
  HwVerdict verdict = HwVerdict::ConjectureHolds;
  /// Presentation of M, persisted for a counterexample candidate.
  std::string certificate;
};

HwCheckResult hwCheck(const PresentedModule& m, const IsoOptions& options = {});

struct EvenDimResult {
  std::int64_t torsionLength = 0;
  int periodicTwist = 0;
  bool torsionNonzero = false;
};

EvenDimResult evenDimTorsionCheck(const PresentedModule& m, const IsoOptions& options = {});

struct DepthZeroResult {
  int depth = -1;
  bool holds = false;
};

DepthZeroResult depthZeroCheck(const PresentedModule& m, int window = 10);

}  // namespace hwprobe
