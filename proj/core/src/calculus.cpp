#include "hwprobe/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "hwprobe/error.hpp"
#include "hwprobe/linalg.hpp"

namespace hwprobe {

namespace {

void requireSameRing(const PresentedModule& a, const PresentedModule& b) {
  if (a.ringPtr() != b.ringPtr()) throw InputError("modules over different rings");
}

Matrix zeroRowsMatrix(const PolyRingPtr& s, const std::vector<int>& colDegrees) {
  return Matrix(s, {}, colDegrees);
}

Matrix zeroColsMatrix(const PolyRingPtr& s, const std::vector<int>& rowDegrees) {
  return Matrix(s, rowDegrees, {});
}

std::vector<int> negated(std::vector<int> v) {
  for (auto& d : v) d = -d;
  return v;
}

std::vector<int> freeDegrees(const PresentedModule& m, int i) {
  if (i == 0) return m.generatorDegrees();
  return m.differential(i).colDegrees();
}

Vec polyVec(const FreeModule& line, const Poly& p) {
  return line.fromColumn(std::span<const Poly>(&p, 1));
}

}  // namespace

std::vector<int> Resolution::betti() const {
  std::vector<int> b;
  if (differentials.empty()) return b;
  b.push_back(differentials.front().rows());
  for (const auto& d : differentials) b.push_back(d.cols());
  return b;
}

bool Resolution::isMinimal() const {
  for (const auto& d : differentials)
    for (int i = 0; i < d.rows(); ++i)
      for (int j = 0; j < d.cols(); ++j)
        if (!d.at(i, j).isZero() && d.rowDegrees()[static_cast<std::size_t>(i)] ==
                                        d.colDegrees()[static_cast<std::size_t>(j)])
          return false;
  return true;
}

bool Resolution::isComplex(const QuotientRing& ring) const {
  for (std::size_t k = 0; k + 1 < differentials.size(); ++k) {
    Matrix prod = differentials[k] * differentials[k + 1];
    for (int i = 0; i < prod.rows(); ++i)
      for (int j = 0; j < prod.cols(); ++j)
        if (!ring.isZero(prod.at(i, j))) return false;
  }
  return true;
}

Resolution minimalFreeResolution(const PresentedModule& m, int length) {
  if (length < 1) throw InputError("resolution length must be at least 1");
  Resolution r;
  for (int i = 1; i <= length; ++i) r.differentials.push_back(m.differential(i));
  return r;
}

PresentedModule syzygyModule(const PresentedModule& m, int n) {
  if (n < 0) throw InputError("negative syzygy index");
  if (n == 0) return m;
  return PresentedModule::fromMinimal(m.ringPtr(), m.differential(n + 1));
}

PresentedModule trimFreeSummands(const PresentedModule& m, int* count) {
  const Matrix& p = m.presentation();
  std::vector<int> keep;
  for (int i = 0; i < p.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < p.cols() && zero; ++j) zero = p.at(i, j).isZero();
    if (!zero) keep.push_back(i);
  }
  if (count) *count = p.rows() - static_cast<int>(keep.size());
  return PresentedModule::fromMinimal(m.ringPtr(), p.withRows(keep));
}

PresentedModule directSum(const PresentedModule& a, const PresentedModule& b) {
  requireSameRing(a, b);
  return PresentedModule::fromMinimal(a.ringPtr(), a.presentation().directSum(b.presentation()));
}

PresentedModule tensor(const PresentedModule& a, const PresentedModule& b) {
  requireSameRing(a, b);
  const auto s = a.ring().ambientPtr();
  const Matrix& p = a.presentation();
  const Matrix& q = b.presentation();
  Matrix left = p.kronecker(Matrix::identity(s, q.rowDegrees()));
  Matrix right = Matrix::identity(s, p.rowDegrees()).kronecker(q);
  return PresentedModule::present(a.ringPtr(), left.concatColumns(right));
}

Subquotient homSubquotient(const PresentedModule& m, const PresentedModule& n) {
  requireSameRing(m, n);
  const auto s = m.ring().ambientPtr();
  std::vector<int> spot = negated(m.generatorDegrees());
  Matrix incoming = zeroColsMatrix(s, spot);
  Matrix outgoing = m.isFree() ? zeroRowsMatrix(s, spot) : m.presentation().transpose();
  return homologyAt(m.ringPtr(), spot, incoming, outgoing, n);
}

PresentedModule hom(const PresentedModule& m, const PresentedModule& n) {
  return homSubquotient(m, n).toModule();
}

PresentedModule dual(const PresentedModule& m) {
  return hom(m, PresentedModule::freeModule(m.ringPtr(), {0}));
}

PresentedModule transpose(const PresentedModule& m) {
  if (m.isFree()) return PresentedModule::freeModule(m.ringPtr(), {});
  return PresentedModule::present(m.ringPtr(), m.presentation().transpose());
}

Subquotient torSubquotient(const PresentedModule& m, const PresentedModule& n, int i) {
  requireSameRing(m, n);
  if (i < 0) throw InputError("negative Tor index");
  const auto s = m.ring().ambientPtr();
  std::vector<int> spot = freeDegrees(m, i);
  Matrix incoming = m.differential(i + 1);
  Matrix outgoing = i == 0 ? zeroRowsMatrix(s, spot) : m.differential(i);
  return homologyAt(m.ringPtr(), spot, incoming, outgoing, n);
}

PresentedModule tor(const PresentedModule& m, const PresentedModule& n, int i) {
  return torSubquotient(m, n, i).toModule();
}

Subquotient extSubquotient(const PresentedModule& m, const PresentedModule& n, int i) {
  requireSameRing(m, n);
  if (i < 0) throw InputError("negative Ext index");
  const auto s = m.ring().ambientPtr();
  std::vector<int> spot = negated(freeDegrees(m, i));
  Matrix incoming = i == 0 ? zeroColsMatrix(s, spot) : m.differential(i).transpose();
  Matrix next = m.differential(i + 1);
  Matrix outgoing = next.cols() == 0 ? zeroRowsMatrix(s, spot) : next.transpose();
  return homologyAt(m.ringPtr(), spot, incoming, outgoing, n);
}

PresentedModule ext(const PresentedModule& m, const PresentedModule& n, int i) {
  return extSubquotient(m, n, i).toModule();
}

std::vector<std::int64_t> hilbertFunction(const PresentedModule& m, int lo, int hi) {
  return m.hilbertSeries().values(lo, hi);
}

std::optional<std::int64_t> length(const PresentedModule& m) { return m.hilbertSeries().length(); }

int krullDim(const PresentedModule& m) { return m.hilbertSeries().dimension(); }

Matrix koszulDifferential(const PolyRingPtr& ring, int i) {
  const int n = ring->numVars();
  auto subsets = [&](int size) {
    std::vector<std::uint32_t> out;
    if (size < 0 || size > n) return out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
      if (__builtin_popcount(mask) == size) out.push_back(mask);
    return out;
  };
  auto degreeOf = [&](std::uint32_t mask) {
    int d = 0;
    for (int k = 0; k < n; ++k)
      if (mask & (1u << k)) d += ring->weights()[static_cast<std::size_t>(k)];
    return d;
  };
  auto rowsSets = subsets(i - 1);
  auto colSets = subsets(i);
  std::vector<int> rowDeg, colDeg;
  for (auto m : rowsSets) rowDeg.push_back(degreeOf(m));
  for (auto m : colSets) colDeg.push_back(degreeOf(m));
  Matrix d(ring, rowDeg, colDeg);
  std::map<std::uint32_t, int> rowIndex;
  for (std::size_t k = 0; k < rowsSets.size(); ++k) rowIndex[rowsSets[k]] = static_cast<int>(k);
  for (std::size_t j = 0; j < colSets.size(); ++j) {
    int position = 0;
    for (int k = 0; k < n; ++k) {
      if (!(colSets[j] & (1u << k))) continue;
      Poly x = ring->var(k);
      if (position % 2 == 1) x = ring->neg(x);
      d.set(rowIndex.at(colSets[j] & ~(1u << k)), static_cast<int>(j), std::move(x));
      ++position;
    }
  }
  return d;
}

int depth(const PresentedModule& m) {
  if (m.isZero()) throw HypothesisError("depth of the zero module");
  const auto s = m.ring().ambientPtr();
  const int n = s->numVars();
  for (int i = n; i >= 0; --i) {
    Matrix out = i >= 1 ? koszulDifferential(s, i) : zeroRowsMatrix(s, {0});
    std::vector<int> spot = i >= 1 ? out.colDegrees() : std::vector<int>{0};
    Matrix in = i + 1 <= n ? koszulDifferential(s, i + 1) : zeroColsMatrix(s, spot);
    if (!homologyAt(m.ringPtr(), spot, in, out, m).isZero()) return n - i;
  }
  throw InternalError("Koszul homology vanished for a nonzero module");
}

int grade(const PresentedModule& m) {
  if (m.isZero()) throw HypothesisError("grade of the zero module");
  auto r = PresentedModule::freeModule(m.ringPtr(), {0});
  for (int i = 0; i <= m.ring().numVars(); ++i)
    if (!extSubquotient(m, r, i).isZero()) return i;
  throw InternalError("no nonvanishing Ext(M, R) found");
}

int rank(const PresentedModule& m) {
  if (!m.ring().isDomain()) throw HypothesisError("rank requires a ring asserted to be a domain");
  if (m.isZero()) return 0;
  const auto& hs = m.hilbertSeries();
  const auto& hr = m.ring().hilbertSeries();
  if (hs.dimension() < hr.dimension()) return 0;
  std::int64_t num = hs.reducedValueAtOne();
  std::int64_t den = hr.reducedValueAtOne();
  if (den == 0 || num % den != 0) throw InternalError("multiplicity ratio is not an integer");
  return static_cast<int>(num / den);
}

namespace {

Poly determinant(const PolyRing& s, const std::vector<std::vector<Poly>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return s.constant(1);
  if (n == 1) return a[0][0];
  if (n == 2) return s.sub(s.mul(a[0][0], a[1][1]), s.mul(a[0][1], a[1][0]));
  Poly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].isZero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    Poly term = s.mul(a[0][j], determinant(s, minor));
    det = j % 2 == 0 ? s.add(det, term) : s.sub(det, term);
  }
  return det;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void forEachSubset(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (k > n) return;
  while (true) {
    if (!f(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::vector<Poly> minors(const QuotientRing& ring, const Matrix& p, int r, std::size_t budget) {
  std::vector<Poly> out;
  if (r <= 0) {
    out.push_back(ring.ambient().constant(1));
    return out;
  }
  if (r > p.rows() || r > p.cols()) return out;
  if (binomial(p.rows(), r) * binomial(p.cols(), r) > static_cast<double>(budget))
    throw Error("minor enumeration exceeds its budget");
  const auto& s = ring.ambient();
  forEachSubset(p.rows(), r, [&](const std::vector<int>& rows) {
    forEachSubset(p.cols(), r, [&](const std::vector<int>& cols) {
      std::vector<std::vector<Poly>> a;
      for (int i : rows) {
        std::vector<Poly> row;
        for (int j : cols) row.push_back(p.at(i, j));
        a.push_back(std::move(row));
      }
      Poly d = ring.reduce(determinant(s, a));
      if (!d.isZero()) out.push_back(std::move(d));
      return true;
    });
    return true;
  });
  return out;
}

std::optional<int> rankByMinors(const PresentedModule& m, std::size_t minorBudget) {
  if (!m.ring().isDomain()) throw HypothesisError("rank requires a ring asserted to be a domain");
  const Matrix& p = m.presentation();
  int largest = 0;
  try {
    for (int r = 1; r <= std::min(p.rows(), p.cols()); ++r) {
      if (minors(m.ring(), p, r, minorBudget).empty()) break;
      largest = r;
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  return m.numGenerators() - largest;
}

std::vector<Poly> fittingIdeal(const PresentedModule& m, int j) {
  const int k = m.numGenerators() - j;
  std::vector<Poly> gens = minors(m.ring(), m.presentation(), k);
  for (const auto& g : m.ring().idealBasis()) gens.push_back(g);
  return gens;
}

int idealQuotientDim(const QuotientRing& ring, const std::vector<Poly>& j) {
  FreeModule line(ring.ambientPtr(), {0});
  std::vector<Vec> gens;
  for (const auto& g : j)
    if (!g.isZero()) gens.push_back(polyVec(line, g));
  for (const auto& g : ring.idealBasis()) gens.push_back(polyVec(line, g));
  return hilbertSeries(buchberger(line, gens)).dimension();
}

int nonfreeLocusDim(const PresentedModule& m) {
  const int r = rank(m);
  return idealQuotientDim(m.ring(), fittingIdeal(m, r));
}

std::vector<Vec> colon(const QuotientRing& ring, const FreeModule& f, const std::vector<Vec>& u,
                       const std::vector<Poly>& j) {
  std::vector<Poly> js;
  for (const auto& g : j)
    if (!g.isZero()) js.push_back(g);
  const int rk = f.rank();
  if (js.empty()) {
    std::vector<Vec> all;
    for (int c = 0; c < rk; ++c) all.push_back(f.basis(static_cast<std::uint32_t>(c)));
    return all;
  }
  std::vector<int> big;
  for (const auto& g : js)
    for (int c = 0; c < rk; ++c) big.push_back(f.twist(static_cast<std::uint32_t>(c)) - g.lead().mono.degree);
  FreeModule fm(f.ringPtr(), big);
  std::vector<Vec> cols;
  std::vector<int> degrees;
  for (int c = 0; c < rk; ++c) {
    std::vector<ModTerm> terms;
    for (std::size_t k = 0; k < js.size(); ++k)
      for (const auto& t : js[k].terms)
        terms.push_back({t.mono, static_cast<std::uint32_t>(k * static_cast<std::size_t>(rk) + static_cast<std::size_t>(c)), t.coef});
    cols.push_back(fm.normalize(std::move(terms)));
    degrees.push_back(f.twist(static_cast<std::uint32_t>(c)));
  }
  for (std::size_t k = 0; k < js.size(); ++k)
    for (const auto& v : u) {
      if (v.isZero()) continue;
      std::vector<ModTerm> terms;
      for (const auto& t : v.terms)
        terms.push_back({t.mono, static_cast<std::uint32_t>(k * static_cast<std::size_t>(rk) + t.comp), t.coef});
      cols.push_back(fm.normalize(std::move(terms)));
      degrees.push_back(f.degree(v) - js[k].lead().mono.degree);
    }
  auto syz = syzygiesOver(ring, fm, cols, degrees);
  std::vector<Vec> out;
  for (const auto& s : syz) {
    std::vector<ModTerm> kept;
    for (const auto& t : s.terms)
      if (t.comp < static_cast<std::uint32_t>(rk)) kept.push_back(t);
    Vec v = ring.reduce(f, f.normalize(std::move(kept)));
    if (!v.isZero()) out.push_back(std::move(v));
  }
  for (const auto& v : u)
    if (!v.isZero()) out.push_back(v);
  return minimalGenerators(ring, f, std::move(out));
}

std::vector<Vec> colonSaturate(const QuotientRing& ring, const FreeModule& f,
                               const std::vector<Vec>& u, const std::vector<Poly>& j) {
  std::vector<Vec> current = u;
  HilbertSeries hs = hilbertSeries(submoduleBasis(ring, f, current));
  for (int iter = 0; iter < 256; ++iter) {
    std::vector<Vec> next = colon(ring, f, current, j);
    HilbertSeries hn = hilbertSeries(submoduleBasis(ring, f, next));
    if (hn == hs) return current;
    current = std::move(next);
    hs = std::move(hn);
  }
  throw InternalError("saturation did not stabilize");
}

Subquotient torsionBySaturation(const PresentedModule& m) {
  const auto& ring = m.ring();
  FreeModule f = m.generatorModule();
  std::vector<Vec> u = m.presentation().columns();
  std::vector<Poly> vars;
  for (int k = 0; k < ring.numVars(); ++k) vars.push_back(ring.ambient().var(k));
  std::vector<Vec> sat = colonSaturate(ring, f, u, vars);
  return Subquotient{m.ringPtr(), f, sat, u};
}

Subquotient torsionByBiduality(const PresentedModule& m) {
  const auto& ring = m.ring();
  FreeModule f = m.generatorModule();
  std::vector<Vec> u = m.presentation().columns();
  Subquotient dualSq = homSubquotient(m, PresentedModule::freeModule(m.ringPtr(), {0}));
  std::vector<Vec> k = minimalGenerators(ring, dualSq.ambient, dualSq.numerator, dualSq.denominator);
  if (k.empty()) {
    std::vector<Vec> all;
    for (int c = 0; c < f.rank(); ++c) all.push_back(f.basis(static_cast<std::uint32_t>(c)));
    return Subquotient{m.ringPtr(), f, all, u};
  }
  std::vector<int> rowDeg;
  for (const auto& v : k) rowDeg.push_back(-dualSq.ambient.degree(v));
  Matrix kt(ring.ambientPtr(), rowDeg, m.generatorDegrees());
  for (std::size_t l = 0; l < k.size(); ++l) {
    auto col = dualSq.ambient.toColumn(k[l]);
    for (int c = 0; c < f.rank(); ++c) kt.set(static_cast<int>(l), c, col[static_cast<std::size_t>(c)]);
  }
  auto kernel = syzygiesOver(ring, kt.target(), kt.columns(), kt.colDegrees());
  std::vector<Vec> numerator;
  for (const auto& v : kernel) numerator.push_back(f.normalize(v.terms));
  for (const auto& v : u) numerator.push_back(v);
  return Subquotient{m.ringPtr(), f, numerator, u};
}

Subquotient torsionSubmodule(const PresentedModule& m) {
  if (!m.ring().isDomain()) throw HypothesisError("torsion submodule requires a domain");
  if (m.ring().dimension() == 1) return torsionBySaturation(m);
  return torsionByBiduality(m);
}

std::string toString(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Iso: return "ISO";
    case IsoVerdict::NotIso: return "NOT_ISO";
    case IsoVerdict::Undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

namespace {

struct HomSearch {
  IsoVerdict verdict = IsoVerdict::Undecided;
  std::optional<Matrix> certificate;
  std::string reason;
  std::size_t samples = 0;
  int dimension = 0;
};

struct Unknown {
  int j;  // source generator
  int i;  // target generator
  Monomial mono;
};

/// Constant part of the map given by coefficient vector x, as a dense
/// g x g matrix (rows: target generators).
DenseMatrix constantPart(const std::vector<Unknown>& unknowns, const std::vector<Coeff>& x,
                         int rows, int cols) {
  DenseMatrix d(rows, cols);
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    if (unknowns[u].mono.isOne()) d.at(unknowns[u].i, unknowns[u].j) = x[u];
  return d;
}

Matrix mapMatrix(const PresentedModule& source, const PresentedModule& target,
                 const std::vector<Unknown>& unknowns, const std::vector<Coeff>& x) {
  const auto& s = source.ring().ambient();
  Matrix phi(source.ring().ambientPtr(), target.generatorDegrees(), source.generatorDegrees());
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    if (x[u] == 0) continue;
    const auto& k = unknowns[u];
    phi.set(k.i, k.j, s.add(phi.at(k.i, k.j), s.fromTerm(k.mono, x[u])));
  }
  return phi;
}

HomSearch searchIso(const PresentedModule& ma, const PresentedModule& n, const IsoOptions& opt) {
  HomSearch out;
  const auto& ring = n.ring();
  const auto& s = ring.ambient();
  const auto& field = s.field();
  const GroebnerBasis& gbN = n.relationBasis();
  FreeModule g0 = n.generatorModule();
  const int gm = ma.numGenerators();
  const int gn = n.numGenerators();

  std::vector<Unknown> unknowns;
  for (int j = 0; j < gm; ++j) {
    const int dj = ma.generatorDegrees()[static_cast<std::size_t>(j)];
    for (int i = 0; i < gn; ++i) {
      const int d = dj - n.generatorDegrees()[static_cast<std::size_t>(i)];
      if (d < 0) continue;
      auto lead = gbN.leadMonomials(static_cast<std::uint32_t>(i));
      for (const auto& mono : s.monomialsOfDegree(d)) {
        bool standard = true;
        for (const auto& l : lead)
          if (divides(l, mono)) {
            standard = false;
            break;
          }
        if (standard) unknowns.push_back({j, i, mono});
      }
    }
  }
  // Linear conditions: Phi * (each relation of M) reduces to zero in N.
  std::map<std::tuple<int, std::uint32_t, std::array<std::uint16_t, kMaxVars>>, int> rowIndex;
  std::vector<std::vector<std::pair<int, Coeff>>> columns(unknowns.size());
  const Matrix& pm = ma.presentation();
  for (int c = 0; c < pm.cols(); ++c) {
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      const Poly& entry = pm.at(unknowns[u].j, c);
      if (entry.isZero()) continue;
      Poly image = s.mulTerm(entry, unknowns[u].mono, 1);
      Vec v = g0.mulPoly(g0.basis(static_cast<std::uint32_t>(unknowns[u].i)), image);
      Vec nf = gbN.normalForm(v);
      for (const auto& t : nf.terms) {
        auto key = std::make_tuple(c, t.comp, t.mono.exp);
        auto it = rowIndex.find(key);
        int row = it == rowIndex.end() ? static_cast<int>(rowIndex.size()) : it->second;
        if (it == rowIndex.end()) rowIndex.emplace(key, row);
        columns[u].push_back({row, t.coef});
      }
    }
  }
  DenseMatrix system(static_cast<int>(rowIndex.size()), static_cast<int>(unknowns.size()));
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    for (auto [row, coef] : columns[u]) system.at(row, static_cast<int>(u)) = field.add(system.at(row, static_cast<int>(u)), coef);
  auto basis = nullspace(system, field);
  out.dimension = static_cast<int>(basis.size());
  if (basis.empty()) {
    out.verdict = IsoVerdict::NotIso;
    out.reason = "no nonzero degree-0 homomorphism";
    return out;
  }
  // Span of all constant parts must reach every generator of N.
  DenseMatrix span(gn, gm * static_cast<int>(basis.size()));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    DenseMatrix c = constantPart(unknowns, basis[b], gn, gm);
    for (int i = 0; i < gn; ++i)
      for (int j = 0; j < gm; ++j) span.at(i, static_cast<int>(b) * gm + j) = c.at(i, j);
  }
  if (rank(span, field) < gn) {
    out.verdict = IsoVerdict::NotIso;
    out.reason = "degree-0 homomorphisms miss a minimal generator";
    return out;
  }
  auto tryCombination = [&](const std::vector<Coeff>& coeffs) {
    std::vector<Coeff> x(unknowns.size(), 0);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (coeffs[b] == 0) continue;
      for (std::size_t u = 0; u < unknowns.size(); ++u)
        x[u] = field.add(x[u], field.mul(coeffs[b], basis[b][u]));
    }
    if (rank(constantPart(unknowns, x, gn, gm), field) == gn) {
      out.verdict = IsoVerdict::Iso;
      out.certificate = mapMatrix(ma, n, unknowns, x);
      return true;
    }
    return false;
  };
  // Single basis elements first: cheap and often enough.
  for (std::size_t b = 0; b < basis.size(); ++b) {
    std::vector<Coeff> e(basis.size(), 0);
    e[b] = 1;
    ++out.samples;
    if (tryCombination(e)) {
      out.reason = "invertible map on minimal generators";
      return out;
    }
  }
  const double space = std::pow(static_cast<double>(field.characteristic()), static_cast<double>(basis.size()));
  if (space <= static_cast<double>(opt.sampleBudget)) {
    std::vector<Coeff> digits(basis.size(), 0);
    while (true) {
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == field.characteristic()) digits[k++] = 0;
      if (k == digits.size()) break;
      ++out.samples;
      if (tryCombination(digits)) {
        out.reason = "invertible map on minimal generators";
        return out;
      }
    }
    out.verdict = IsoVerdict::NotIso;
    out.reason = "exhaustive search found no invertible degree-0 map";
    return out;
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<Coeff> dist(0, field.characteristic() - 1);
  while (out.samples < opt.sampleBudget) {
    std::vector<Coeff> coeffs(basis.size());
    for (auto& c : coeffs) c = dist(rng);
    ++out.samples;
    if (tryCombination(coeffs)) {
      out.reason = "invertible map on minimal generators";
      return out;
    }
  }
  out.reason = "sample budget exhausted";
  return out;
}

std::vector<Vec> idealBasisVecs(const QuotientRing& ring, const std::vector<Poly>& gens) {
  FreeModule line(ring.ambientPtr(), {0});
  std::vector<Vec> v;
  for (const auto& g : gens)
    if (!g.isZero()) v.push_back(polyVec(line, g));
  return buchberger(line, v).elements;
}

bool sameIdeal(const QuotientRing& ring, const std::vector<Poly>& a, const std::vector<Poly>& b) {
  auto ga = idealBasisVecs(ring, a);
  auto gb = idealBasisVecs(ring, b);
  if (ga.size() != gb.size()) return false;
  FreeModule line(ring.ambientPtr(), {0});
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (line.toString(ga[i]) != line.toString(gb[i])) return false;
  return true;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

IsoResult isIsomorphic(const PresentedModule& m, const PresentedModule& n, const IsoOptions& options) {
  requireSameRing(m, n);
  IsoResult result;
  if (m.isZero() || n.isZero()) {
    if (m.isZero() && n.isZero()) {
      result.verdict = IsoVerdict::Iso;
      result.certificate = Matrix(m.ring().ambientPtr(), {}, {});
      result.reason = "both modules are zero";
    } else {
      result.verdict = IsoVerdict::NotIso;
      result.reason = "hilbert-series";
    }
    return result;
  }
  std::vector<int> candidates;
  if (options.allowTwist) {
    for (int a = -options.twistWindow; a <= options.twistWindow; ++a)
      if (n.hilbertSeries() == m.hilbertSeries().twisted(a)) candidates.push_back(a);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](int a, int b) { return std::abs(a) < std::abs(b); });
  } else if (n.hilbertSeries() == m.hilbertSeries()) {
    candidates.push_back(0);
  }
  if (candidates.empty()) {
    result.verdict = IsoVerdict::NotIso;
    result.reason = "hilbert-series";
    return result;
  }
  // Fitting ideals do not see twists.
  const int g = std::max(m.numGenerators(), n.numGenerators());
  for (int j = 0; j < g; ++j) {
    try {
      if (!sameIdeal(m.ring(), fittingIdeal(m, j), fittingIdeal(n, j))) {
        result.verdict = IsoVerdict::NotIso;
        result.reason = "fitting-ideal-" + std::to_string(j);
        return result;
      }
    } catch (const Error&) {
      break;
    }
  }
  std::string lastReason = "betti-table";
  bool undecided = false;
  for (int a : candidates) {
    PresentedModule ma = m.twisted(a);
    if (sorted(ma.generatorDegrees()) != sorted(n.generatorDegrees()) ||
        sorted(ma.presentation().colDegrees()) != sorted(n.presentation().colDegrees())) {
      lastReason = "betti-table";
      continue;
    }
    HomSearch h = searchIso(ma, n, options);
    result.samplesUsed += h.samples;
    result.homDimension = h.dimension;
    if (h.verdict == IsoVerdict::Iso) {
      result.verdict = IsoVerdict::Iso;
      result.twist = a;
      result.certificate = h.certificate;
      result.reason = h.reason;
      return result;
    }
    if (h.verdict == IsoVerdict::Undecided) undecided = true;
    lastReason = h.reason;
  }
  result.verdict = undecided ? IsoVerdict::Undecided : IsoVerdict::NotIso;
  result.reason = lastReason;
  return result;
}

bool verifyIsoCertificate(const PresentedModule& m, const PresentedModule& n, const Matrix& phi) {
  if (phi.rows() != n.numGenerators() || phi.cols() != m.numGenerators()) return false;
  if (m.numGenerators() != n.numGenerators()) return false;
  if (!phi.isHomogeneous()) return false;
  if (phi.rowDegrees() != n.generatorDegrees()) return false;
  const int a = m.isZero() ? 0 : m.generatorDegrees()[0] - phi.colDegrees()[0];
  PresentedModule ma = m.twisted(a);
  if (phi.colDegrees() != ma.generatorDegrees()) return false;
  if (!(n.hilbertSeries() == ma.hilbertSeries())) return false;
  const auto& gb = n.relationBasis();
  if (ma.numRelations() > 0) {
    Matrix image = phi * ma.presentation();
    for (const auto& v : image.columns())
      if (!gb.normalForm(v).isZero()) return false;
  }
  const auto& field = m.ring().ambient().field();
  DenseMatrix c(phi.rows(), phi.cols());
  for (int i = 0; i < phi.rows(); ++i)
    for (int j = 0; j < phi.cols(); ++j) {
      const Poly& e = phi.at(i, j);
      if (!e.isZero() && e.lead().mono.isOne()) c.at(i, j) = e.lead().coef;
    }
  return rank(c, field) == phi.rows();
}

std::string toString(ComplexityClass c) {
  switch (c) {
    case ComplexityClass::PdFinite: return "pd-finite";
    case ComplexityClass::Bounded: return "bounded";
    case ComplexityClass::PolynomialGrowth: return "polynomial-growth";
    case ComplexityClass::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::vector<int> bettiNumbers(const PresentedModule& m, int window) {
  std::vector<int> b{m.numGenerators()};
  for (int i = 1; i <= window; ++i) b.push_back(m.differential(i).cols());
  return b;
}

ComplexityEstimate complexityEstimate(const PresentedModule& m, int window) {
  if (window < 4) throw InputError("complexity window must be at least 4");
  ComplexityEstimate e;
  e.betti = bettiNumbers(m, window);
  for (int i = 0; i <= window; ++i)
    if (e.betti[static_cast<std::size_t>(i)] == 0) {
      e.kind = ComplexityClass::PdFinite;
      e.projectiveDimension = i - 1;
      return e;
    }
  const int half = window / 2;
  int headMax = 0, tailMax = 0;
  for (int i = 0; i <= half; ++i) headMax = std::max(headMax, e.betti[static_cast<std::size_t>(i)]);
  for (int i = half + 1; i <= window; ++i) tailMax = std::max(tailMax, e.betti[static_cast<std::size_t>(i)]);
  if (tailMax <= headMax) {
    e.kind = ComplexityClass::Bounded;
    return e;
  }
  bool geometric = true;
  for (int i = half; i < window; ++i)
    if (2 * e.betti[static_cast<std::size_t>(i + 1)] < 3 * e.betti[static_cast<std::size_t>(i)]) geometric = false;
  if (geometric) return e;
  const double ratio = std::log(static_cast<double>(e.betti[static_cast<std::size_t>(window)]) /
                                static_cast<double>(e.betti[static_cast<std::size_t>(half)]));
  const double span = std::log(static_cast<double>(window) / static_cast<double>(half));
  e.kind = ComplexityClass::PolynomialGrowth;
  e.fittedDegree = static_cast<int>(std::lround(ratio / span));
  return e;
}

}  // namespace hwprobe
