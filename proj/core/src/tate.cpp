#include "hwprobe/tate.hpp"

#include <algorithm>
#include <cstdlib>

#include "hwprobe/error.hpp"

namespace hwprobe {

namespace {

Matrix reduceEntries(const QuotientRing& ring, Matrix m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).isZero()) m.set(i, j, ring.reduce(m.at(i, j)));
  return m;
}

bool isScalarTimesIdentity(const PolyRing& s, const Matrix& m, const Poly& f) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Poly expected = i == j ? f : Poly{};
      if (!s.sub(m.at(i, j), expected).isZero()) return false;
    }
  return true;
}

int floorDiv(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::vector<int> negated(std::vector<int> v) {
  for (auto& d : v) d = -d;
  return v;
}

int minDegree(const std::vector<int>& v) {
  return v.empty() ? 0 : *std::min_element(v.begin(), v.end());
}

void verifyAcyclic(CompleteResolution& t) {
  auto r = PresentedModule::freeModule(t.ring, {0});
  for (int k = 0; k < t.period; ++k) {
    const int i = t.start + k;
    if (!tateTorSubquotient(t, r, i).isZero() || !tateExtSubquotient(t, r, i).isZero())
      throw HypothesisError("periodic complex is not totally acyclic at index " + std::to_string(i));
  }
}

}  // namespace

bool MatrixFactorization::verify() const {
  const auto& s = ring->ambient();
  return a.rows() == a.cols() && b.rows() == b.cols() && a.rows() == b.rows() &&
         isScalarTimesIdentity(s, a * b, f) && isScalarTimesIdentity(s, b * a, f);
}

MatrixFactorization matrixFactorization(const PresentedModule& m) {
  const auto& ring = m.ring();
  if (!ring.isHypersurface()) throw HypothesisError("matrix factorization requires a hypersurface ring");
  if (m.isZero()) throw HypothesisError("matrix factorization of the zero module");
  int freeCount = 0;
  trimFreeSummands(m, &freeCount);
  if (freeCount > 0) throw HypothesisError("module has a free summand");
  if (depth(m) != ring.dimension()) throw HypothesisError("module is not maximal Cohen-Macaulay");
  const Matrix& a = m.presentation();
  if (a.rows() != a.cols()) throw InternalError("presentation of an MCM module is not square");
  MatrixFactorization mf;
  mf.ring = m.ringPtr();
  mf.f = ring.equation();
  mf.a = a;
  const auto s = ring.ambientPtr();
  const int d = mf.f.lead().mono.degree;
  std::vector<int> shifted = a.rowDegrees();
  for (auto& x : shifted) x += d;
  mf.b = Matrix(s, a.colDegrees(), shifted);
  FreeModule f0 = a.target();
  FreeModule reps(s, a.colDegrees());
  const auto cols = a.columns();
  for (int j = 0; j < a.rows(); ++j) {
    auto lift = liftThrough(f0, cols, f0.mulPoly(f0.basis(static_cast<std::uint32_t>(j)), mf.f));
    if (!lift) throw InternalError("f e_j does not lie in the image of the lifted presentation");
    auto column = reps.toColumn(*lift);
    for (int k = 0; k < a.cols(); ++k) mf.b.set(k, j, column[static_cast<std::size_t>(k)]);
  }
  if (!mf.verify()) throw InternalError("matrix factorization products differ from f I");
  return mf;
}

Matrix CompleteResolution::differential(int i) const {
  const int k = floorDiv(i - start, period);
  const int r = i - start - k * period;
  return maps[static_cast<std::size_t>(r)].shifted(k * shift);
}

std::vector<int> CompleteResolution::degrees(int i) const { return differential(i).colDegrees(); }

IsoResult periodicityCheck(const PresentedModule& m, int q, const IsoOptions& options) {
  PresentedModule omega = syzygyModule(m, q);
  IsoOptions opt = options;
  opt.allowTwist = true;
  const int growth = minDegree(omega.generatorDegrees()) - minDegree(m.generatorDegrees());
  opt.twistWindow = std::max(options.twistWindow, std::abs(growth) + 2);
  return isIsomorphic(m, omega, opt);
}

CompleteResolution completeResolution(const PresentedModule& m, int window, int maxPeriod) {
  if (m.isZero()) throw HypothesisError("no periodicity: zero module");
  PresentedModule core = trimFreeSummands(m);
  if (core.isZero()) throw HypothesisError("no periodicity: module is free");
  const auto& ring = m.ring();
  CompleteResolution t;
  t.ring = m.ringPtr();
  t.window = window;
  if (ring.isHypersurface() && depth(core) == ring.dimension()) {
    MatrixFactorization mf = matrixFactorization(core);
    t.period = 2;
    t.start = 1;
    t.shift = mf.f.lead().mono.degree;
    t.maps = {reduceEntries(ring, mf.a), reduceEntries(ring, mf.b)};
    t.fromFactorization = true;
    verifyAcyclic(t);
    return t;
  }
  for (int i0 = 0; i0 <= window; ++i0) {
    for (int q = 2; q <= maxPeriod; q += 2) {
      for (int k = i0 + 1; k <= i0 + q + 1; ++k)
        if (m.differential(k).cols() == 0)
          throw HypothesisError("no periodicity: finite projective dimension");
      const Matrix first = m.differential(i0 + 1);
      const Matrix again = m.differential(i0 + q + 1);
      if (first.rows() != again.rows() || first.cols() != again.cols()) continue;
      IsoOptions opt;
      opt.allowTwist = true;
      const int growth = minDegree(again.rowDegrees()) - minDegree(first.rowDegrees());
      opt.twistWindow = std::max(opt.twistWindow, std::abs(growth) + 2);
      IsoResult iso = isIsomorphic(syzygyModule(m, i0), syzygyModule(m, i0 + q), opt);
      if (iso.verdict != IsoVerdict::Iso) continue;
      t.period = q;
      t.start = i0 + 1;
      t.shift = -iso.twist;
      t.agreesFrom = i0;
      for (int k = i0 + 1; k < i0 + q; ++k) t.maps.push_back(m.differential(k));
      t.maps.push_back(reduceEntries(ring, m.differential(i0 + q) * *iso.certificate));
      t.closingMap = iso.certificate;
      verifyAcyclic(t);
      return t;
    }
  }
  throw HypothesisError("no periodicity detected in window " + std::to_string(window));
}

Subquotient tateTorSubquotient(const CompleteResolution& t, const PresentedModule& n, int i) {
  if (t.ring != n.ringPtr()) throw InputError("modules over different rings");
  return homologyAt(t.ring, t.degrees(i), t.differential(i + 1), t.differential(i), n);
}

Subquotient tateExtSubquotient(const CompleteResolution& t, const PresentedModule& n, int i) {
  if (t.ring != n.ringPtr()) throw InputError("modules over different rings");
  return homologyAt(t.ring, negated(t.degrees(i)), t.differential(i).transpose(),
                    t.differential(i + 1).transpose(), n);
}

PresentedModule tateTor(const CompleteResolution& t, const PresentedModule& n, int i) {
  return tateTorSubquotient(t, n, i).toModule();
}

PresentedModule tateExt(const CompleteResolution& t, const PresentedModule& n, int i) {
  return tateExtSubquotient(t, n, i).toModule();
}

ThetaResult theta(const PresentedModule& m, const PresentedModule& n) {
  if (m.ringPtr() != n.ringPtr()) throw InputError("modules over different rings");
  ThetaResult r;
  r.replacementIndex = m.ring().dimension();
  if (m.ring().isDomain() && nonfreeLocusDim(syzygyModule(m, r.replacementIndex)) > 0)
    throw HypothesisError("nonfree locus of the stable syzygy has positive dimension");
  int k = 1;
  while (2 * k - 1 <= r.replacementIndex) ++k;
  r.stableIndex = k;
  for (int j = 0; j < 4; ++j) {
    auto len = torSubquotient(m, n, 2 * k - 1 + j).length();
    if (!len) throw HypothesisError("Tor_" + std::to_string(2 * k - 1 + j) + " has infinite length");
    r.lengths[static_cast<std::size_t>(j)] = *len;
  }
  r.value = static_cast<int>(r.lengths[1] - r.lengths[0]);
  r.certificate = static_cast<int>(r.lengths[3] - r.lengths[2]);
  if (r.value != r.certificate) throw HypothesisError("theta did not stabilize");
  return r;
}

ShortExactSequence sequenceFromSubmodule(const PresentedModule& y, const std::vector<Vec>& elements) {
  const auto& ring = y.ring();
  FreeModule f = y.generatorModule();
  std::vector<Vec> rel = y.presentation().columns();
  std::vector<Vec> numerator = elements;
  numerator.insert(numerator.end(), rel.begin(), rel.end());
  std::vector<Vec> gens;
  ShortExactSequence seq;
  seq.y = y;
  seq.x = Subquotient{y.ringPtr(), f, numerator, rel}.toModule(&gens);
  seq.inclusion = Matrix::fromColumns(ring.ambientPtr(), f.twists(), gens, seq.x.generatorDegrees());
  seq.z = PresentedModule::present(y.ringPtr(), y.presentation().concatColumns(seq.inclusion));
  return seq;
}

ShortExactSequence splitSequence(const PresentedModule& x, const PresentedModule& z) {
  ShortExactSequence seq;
  seq.x = x;
  seq.z = z;
  seq.y = directSum(x, z);
  const auto s = x.ring().ambientPtr();
  seq.inclusion = Matrix(s, seq.y.generatorDegrees(), x.generatorDegrees());
  for (int i = 0; i < x.numGenerators(); ++i) seq.inclusion.set(i, i, s->constant(1));
  return seq;
}

bool isExact(const ShortExactSequence& seq) {
  const auto& y = seq.y;
  if (seq.inclusion.rows() != y.numGenerators() || seq.inclusion.cols() != seq.x.numGenerators())
    return false;
  if (seq.x.numRelations() > 0) {
    Matrix image = seq.inclusion * seq.x.presentation();
    for (const auto& v : image.columns())
      if (!y.relationBasis().normalForm(v).isZero()) return false;
  }
  std::vector<Vec> rel = y.presentation().columns();
  std::vector<Vec> numerator = seq.inclusion.columns();
  numerator.insert(numerator.end(), rel.begin(), rel.end());
  Subquotient image{y.ringPtr(), y.generatorModule(), numerator, rel};
  if (!(image.hilbertSeries() == seq.x.hilbertSeries())) return false;
  return y.hilbertSeries() == seq.x.hilbertSeries() + seq.z.hilbertSeries();
}

AdditivityResult thetaAdditivityCheck(const PresentedModule& m, const ShortExactSequence& seq) {
  if (!isExact(seq)) throw InputError("sequence is not exact");
  AdditivityResult r;
  r.thetaX = theta(m, seq.x).value;
  r.thetaY = theta(m, seq.y).value;
  r.thetaZ = theta(m, seq.z).value;
  r.holds = r.thetaY == r.thetaX + r.thetaZ;
  return r;
}

RigidityReport rigidityProbe(const PresentedModule& m, const PresentedModule& n, int window) {
  RigidityReport r;
  r.window = window;
  for (int i = 0; i <= window; ++i) r.lengths.push_back(torSubquotient(m, n, i).length());
  auto vanishes = [&](int i) {
    const auto& l = r.lengths[static_cast<std::size_t>(i)];
    return l.has_value() && *l == 0;
  };
  for (int i = 1; i <= window; ++i) {
    if (!vanishes(i)) continue;
    for (int j = i + 1; j <= window; ++j)
      if (!vanishes(j)) {
        r.gaps.push_back(i);
        break;
      }
  }
  r.periodic = !m.isZero() && periodicityCheck(m, 2).verdict == IsoVerdict::Iso;
  r.hypothesesHold = m.ring().dimension() == 1 && m.ring().isDomain() && r.periodic;
  r.anomaly = r.hypothesesHold && !r.gaps.empty();
  return r;
}

std::string toString(HwVerdict v) {
  return v == HwVerdict::ConjectureHolds ? "CONJECTURE_HOLDS" : "COUNTEREXAMPLE_CANDIDATE";
}

namespace {

std::pair<std::int64_t, std::int64_t> tensorTorsion(const PresentedModule& m) {
  PresentedModule t = tensor(m, dual(m));
  auto sat = torsionBySaturation(t).length();
  auto bid = torsionByBiduality(t).length();
  if (!sat || !bid) throw InternalError("torsion of M (x) M* has infinite length");
  return {*sat, *bid};
}

}  // namespace

HwCheckResult hwCheck(const PresentedModule& m, const IsoOptions& options) {
  const auto& ring = m.ring();
  if (ring.dimension() != 1 || !ring.isDomain())
    throw HypothesisError("hw_check requires a one-dimensional ring asserted to be a domain");
  if (m.isZero()) throw HypothesisError("hw_check of the zero module");
  if (m.isFree()) throw HypothesisError("hw_check requires a nonfree module");
  if (!torsionBySaturation(m).isZero()) throw HypothesisError("module has torsion");
  HwCheckResult r;
  r.degreeBound = currentLimits().degreeBound;
  std::tie(r.torsionLength, r.torsionLengthBiduality) = tensorTorsion(m);
  const bool torsion = r.torsionLength != 0;
  PresentedModule core = trimFreeSummands(m);
  if (ring.isHypersurface()) {
    CompleteResolution t = completeResolution(core);
    r.tateChecked = true;
    r.tateNonzero = !tateTorSubquotient(t, dual(core), 0).isZero();
  }
  if (ring.isGorenstein()) {
    r.extChecked = true;
    r.extNonzero = !extSubquotient(m, m, 1).isZero();
  }
  IsoResult periodic = periodicityCheck(m, 2, options);
  r.periodic = periodic.verdict;
  r.periodicTwist = periodic.twist;
  r.detectorsAgree = r.torsionLength == r.torsionLengthBiduality &&
                     (!r.tateChecked || r.tateNonzero == torsion) &&
                     (!r.extChecked || r.extNonzero == torsion);
  if (torsion) return r;
  r.recheckPerformed = true;
  ScopedLimits doubled(Limits{2 * r.degreeBound});
  r.degreeBound = 2 * r.degreeBound;
  PresentedModule fresh = PresentedModule::fromMinimal(m.ringPtr(), m.presentation());
  std::tie(r.torsionLength, r.torsionLengthBiduality) = tensorTorsion(fresh);
  if (r.torsionLength == 0 && r.torsionLengthBiduality == 0) {
    r.verdict = HwVerdict::CounterexampleCandidate;
    r.certificate = m.presentation().toString();
  }
  return r;
}

EvenDimResult evenDimTorsionCheck(const PresentedModule& m, const IsoOptions& options) {
  const auto& ring = m.ring();
  if (!ring.isGorenstein() || ring.dimension() % 2 != 0)
    throw HypothesisError("requires a Gorenstein ring of even dimension");
  if (m.isZero()) throw HypothesisError("zero module");
  PresentedModule core = trimFreeSummands(m);
  if (core.isZero()) throw HypothesisError("free module is not 2-periodic after trimming");
  IsoResult iso = periodicityCheck(core, 2, options);
  if (iso.verdict != IsoVerdict::Iso) throw HypothesisError("module is not 2-periodic");
  if (ring.isDomain() && nonfreeLocusDim(core) > 0)
    throw HypothesisError("nonfree locus has positive dimension");
  EvenDimResult r;
  r.periodicTwist = iso.twist;
  Subquotient t = torsionByBiduality(tensor(core, dual(core)));
  r.torsionLength = t.length().value_or(-1);
  r.torsionNonzero = !t.isZero();
  return r;
}

DepthZeroResult depthZeroCheck(const PresentedModule& m, int window) {
  const auto& ring = m.ring();
  if (!ring.isHypersurface()) throw HypothesisError("requires a hypersurface ring");
  if (!ring.isDomain()) throw HypothesisError("rank requires a ring asserted to be a domain");
  PresentedModule core = trimFreeSummands(m);
  if (core.isZero()) throw HypothesisError("module is free");
  if (depth(core) != ring.dimension()) throw HypothesisError("module is not maximal Cohen-Macaulay");
  if (complexityEstimate(core, window).kind != ComplexityClass::Bounded)
    throw HypothesisError("Betti numbers are not bounded in the window");
  if (nonfreeLocusDim(core) > 0) throw HypothesisError("nonfree locus has positive dimension");
  DepthZeroResult r;
  r.depth = depth(tensor(core, dual(core)));
  r.holds = r.depth == 0;
  return r;
}

}  // namespace hwprobe
