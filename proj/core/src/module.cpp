#include "hwprobe/module.hpp"

#include <algorithm>
#include <numeric>

#include "hwprobe/error.hpp"

namespace hwprobe {

GroebnerBasis submoduleBasis(const QuotientRing& ring, const FreeModule& f,
                             const std::vector<Vec>& gens) {
  std::vector<Vec> all = ring.idealBlock(f);
  std::vector<bool> flags(all.size(), true);
  for (const auto& g : gens) {
    all.push_back(g);
    flags.push_back(false);
  }
  return buchberger(f, all, flags);
}

std::vector<Vec> syzygiesOver(const QuotientRing& ring, const FreeModule& f,
                              const std::vector<Vec>& columns,
                              const std::vector<int>& columnDegrees) {
  if (columns.size() != columnDegrees.size()) throw InternalError("column degree count mismatch");
  std::vector<Vec> gens = columns;
  std::vector<int> twists = columnDegrees;
  std::vector<bool> flags(columns.size(), false);
  for (auto& v : ring.idealBlock(f)) {
    twists.push_back(f.degree(v));
    gens.push_back(std::move(v));
    flags.push_back(true);
  }
  auto syz = generatorSyzygies(f, gens, twists, flags);
  FreeModule target(f.ringPtr(), columnDegrees);
  const auto m = static_cast<std::uint32_t>(columns.size());
  std::vector<Vec> out;
  for (const auto& s : syz) {
    std::vector<ModTerm> kept;
    for (const auto& t : s.terms)
      if (t.comp < m) kept.push_back(t);
    Vec v = ring.reduce(target, target.normalize(std::move(kept)));
    if (!v.isZero()) out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> minimalGenerators(const QuotientRing& ring, const FreeModule& f,
                                   std::vector<Vec> candidates, const std::vector<Vec>& modulo) {
  GroebnerBuilder builder(f);
  for (const auto& v : ring.idealBlock(f)) builder.addGenerator(v, true);
  for (const auto& v : modulo) builder.addGenerator(v);
  candidates.erase(std::remove_if(candidates.begin(), candidates.end(),
                                  [](const Vec& v) { return v.isZero(); }),
                   candidates.end());
  std::stable_sort(candidates.begin(), candidates.end(), [&](const Vec& a, const Vec& b) {
    return f.degree(a) < f.degree(b);
  });
  std::vector<Vec> chosen;
  for (const auto& c : candidates) {
    builder.completeThrough(f.degree(c));
    if (builder.reduce(c).isZero()) continue;
    chosen.push_back(c);
    builder.addGenerator(c);
  }
  return chosen;
}

Matrix minimalizePresentation(const QuotientRing& ring, const Matrix& p, std::vector<int>* keptRows) {
  const auto& s = ring.ambient();
  const auto& field = s.field();
  Matrix m = p;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.set(i, j, ring.reduce(m.at(i, j)));
  std::vector<bool> rowAlive(static_cast<std::size_t>(m.rows()), true);
  std::vector<bool> colAlive(static_cast<std::size_t>(m.cols()), true);
  while (true) {
    int pi = -1, pj = -1;
    for (int j = 0; j < m.cols() && pi < 0; ++j) {
      if (!colAlive[static_cast<std::size_t>(j)]) continue;
      for (int i = 0; i < m.rows(); ++i) {
        if (!rowAlive[static_cast<std::size_t>(i)] || m.at(i, j).isZero()) continue;
        if (m.colDegrees()[static_cast<std::size_t>(j)] == m.rowDegrees()[static_cast<std::size_t>(i)]) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi < 0) break;
    const Coeff inv = field.inv(m.at(pi, pj).lead().coef);
    for (int l = 0; l < m.cols(); ++l) {
      if (l == pj || !colAlive[static_cast<std::size_t>(l)] || m.at(pi, l).isZero()) continue;
      Poly factor = s.scale(m.at(pi, l), inv);
      for (int i = 0; i < m.rows(); ++i) {
        if (!rowAlive[static_cast<std::size_t>(i)] || m.at(i, pj).isZero()) continue;
        m.set(i, l, ring.reduce(s.sub(m.at(i, l), s.mul(factor, m.at(i, pj)))));
      }
    }
    rowAlive[static_cast<std::size_t>(pi)] = false;
    colAlive[static_cast<std::size_t>(pj)] = false;
  }
  std::vector<int> rows, cols;
  for (int i = 0; i < m.rows(); ++i)
    if (rowAlive[static_cast<std::size_t>(i)]) rows.push_back(i);
  for (int j = 0; j < m.cols(); ++j)
    if (colAlive[static_cast<std::size_t>(j)]) cols.push_back(j);
  Matrix reduced = m.withRows(rows).withColumns(cols);
  FreeModule target = reduced.target();
  auto gens = minimalGenerators(ring, target, reduced.columns());
  std::vector<int> degrees;
  for (const auto& g : gens) degrees.push_back(target.degree(g));
  if (keptRows) *keptRows = rows;
  return Matrix::fromColumns(p.ringPtr(), reduced.rowDegrees(), gens, degrees);
}

PresentedModule PresentedModule::present(QuotientRingPtr ring, const Matrix& presentation,
                                         std::vector<int>* keptRows) {
  if (presentation.ringPtr() != ring->ambientPtr())
    throw InputError("presentation matrix over a different ring");
  if (!presentation.isHomogeneous()) throw InputError("presentation matrix is not homogeneous");
  Matrix m = minimalizePresentation(*ring, presentation, keptRows);
  return fromMinimal(std::move(ring), std::move(m));
}

PresentedModule PresentedModule::fromMinimal(QuotientRingPtr ring, Matrix presentation) {
  PresentedModule m;
  m.ring_ = std::move(ring);
  m.p_ = std::move(presentation);
  m.cache_ = std::make_shared<Cache>();
  return m;
}

PresentedModule PresentedModule::freeModule(QuotientRingPtr ring, std::vector<int> twists) {
  auto s = ring->ambientPtr();
  return fromMinimal(std::move(ring), Matrix(s, std::move(twists), {}));
}

PresentedModule PresentedModule::quotient(QuotientRingPtr ring, const std::vector<Poly>& ideal,
                                          int twist) {
  const auto& s = ring->ambient();
  std::vector<int> degrees;
  std::vector<Poly> kept;
  for (const auto& g : ideal) {
    if (g.isZero()) continue;
    if (!s.isHomogeneous(g)) throw InputError("inhomogeneous ideal generator " + s.toString(g));
    kept.push_back(g);
    degrees.push_back(g.lead().mono.degree + twist);
  }
  Matrix p(ring->ambientPtr(), {twist}, degrees);
  for (std::size_t j = 0; j < kept.size(); ++j) p.set(0, static_cast<int>(j), kept[j]);
  return present(std::move(ring), p);
}

PresentedModule PresentedModule::twisted(int a) const {
  return fromMinimal(ring_, p_.shifted(-a));
}

const GroebnerBasis& PresentedModule::relationBasis() const {
  std::lock_guard<std::recursive_mutex> lock(cache_->mutex);
  if (!cache_->basis) cache_->basis = submoduleBasis(*ring_, p_.target(), p_.columns());
  return *cache_->basis;
}

const HilbertSeries& PresentedModule::hilbertSeries() const {
  std::lock_guard<std::recursive_mutex> lock(cache_->mutex);
  if (!cache_->series) cache_->series = hwprobe::hilbertSeries(relationBasis());
  return *cache_->series;
}

Matrix PresentedModule::differential(int i) const {
  if (i < 1) throw InputError("differential index must be at least 1");
  std::lock_guard<std::recursive_mutex> lock(cache_->mutex);
  auto& d = cache_->differentials;
  if (d.empty()) d.push_back(p_);
  while (static_cast<int>(d.size()) < i) {
    const Matrix& prev = d.back();
    FreeModule target = prev.target();
    FreeModule source = prev.source();
    auto syz = syzygiesOver(*ring_, target, prev.columns(), prev.colDegrees());
    auto gens = minimalGenerators(*ring_, source, std::move(syz));
    std::vector<int> degrees;
    for (const auto& g : gens) degrees.push_back(source.degree(g));
    d.push_back(Matrix::fromColumns(p_.ringPtr(), prev.colDegrees(), gens, degrees));
  }
  return d[static_cast<std::size_t>(i - 1)];
}

HilbertSeries Subquotient::hilbertSeries() const {
  std::vector<Vec> both = denominator;
  both.insert(both.end(), numerator.begin(), numerator.end());
  auto hb = hwprobe::hilbertSeries(submoduleBasis(*ring, ambient, denominator));
  auto hz = hwprobe::hilbertSeries(submoduleBasis(*ring, ambient, both));
  return hb - hz;
}

PresentedModule Subquotient::toModule(std::vector<Vec>* generators) const {
  auto gens = minimalGenerators(*ring, ambient, numerator, denominator);
  std::vector<int> degrees;
  for (const auto& g : gens) degrees.push_back(ambient.degree(g));
  if (gens.empty()) {
    if (generators) generators->clear();
    return PresentedModule::freeModule(ring, {});
  }
  std::vector<Vec> cols = gens;
  std::vector<int> colDegrees = degrees;
  for (const auto& b : denominator) {
    if (b.isZero()) continue;
    cols.push_back(b);
    colDegrees.push_back(ambient.degree(b));
  }
  auto syz = syzygiesOver(*ring, ambient, cols, colDegrees);
  FreeModule genModule(ambient.ringPtr(), degrees);
  const auto m = static_cast<std::uint32_t>(gens.size());
  std::vector<Vec> relations;
  for (const auto& s : syz) {
    std::vector<ModTerm> kept;
    for (const auto& t : s.terms)
      if (t.comp < m) kept.push_back(t);
    Vec v = ring->reduce(genModule, genModule.normalize(std::move(kept)));
    if (!v.isZero()) relations.push_back(std::move(v));
  }
  relations = minimalGenerators(*ring, genModule, std::move(relations));
  std::vector<int> relDegrees;
  for (const auto& r : relations) relDegrees.push_back(genModule.degree(r));
  Matrix p = Matrix::fromColumns(ambient.ringPtr(), degrees, relations, relDegrees);
  std::vector<int> kept;
  PresentedModule out = PresentedModule::present(ring, p, &kept);
  if (generators) {
    generators->clear();
    for (int k : kept) generators->push_back(gens[static_cast<std::size_t>(k)]);
  }
  return out;
}

Subquotient homologyAt(const QuotientRingPtr& ring, const std::vector<int>& spotDegrees,
                       const Matrix& incoming, const Matrix& outgoing, const PresentedModule& n) {
  const auto s = ring->ambientPtr();
  const Matrix& q = n.presentation();
  const std::vector<int>& g0 = q.rowDegrees();
  std::vector<int> wDegrees;
  for (int a : spotDegrees)
    for (int b : g0) wDegrees.push_back(a + b);
  FreeModule w(s, wDegrees);
  Subquotient out{ring, w, {}, {}};

  Matrix idSpot = Matrix::identity(s, spotDegrees);
  Matrix idG0 = Matrix::identity(s, g0);
  for (auto& v : idSpot.kronecker(q).columns())
    if (!v.isZero()) out.denominator.push_back(std::move(v));
  if (incoming.cols() > 0)
    for (auto& v : incoming.kronecker(idG0).columns())
      if (!v.isZero()) out.denominator.push_back(std::move(v));

  if (outgoing.rows() == 0) {
    for (int k = 0; k < w.rank(); ++k) out.numerator.push_back(w.basis(static_cast<std::uint32_t>(k)));
    return out;
  }
  Matrix beta = outgoing.kronecker(idG0);
  Matrix idTarget = Matrix::identity(s, outgoing.rowDegrees());
  Matrix rel = idTarget.kronecker(q);
  FreeModule target = beta.target();
  std::vector<Vec> cols = beta.columns();
  std::vector<int> colDegrees = beta.colDegrees();
  for (int j = 0; j < rel.cols(); ++j) {
    Vec v = rel.column(j);
    if (v.isZero()) continue;
    cols.push_back(std::move(v));
    colDegrees.push_back(rel.colDegrees()[static_cast<std::size_t>(j)]);
  }
  auto syz = syzygiesOver(*ring, target, cols, colDegrees);
  const auto m = static_cast<std::uint32_t>(w.rank());
  for (const auto& v : syz) {
    std::vector<ModTerm> kept;
    for (const auto& t : v.terms)
      if (t.comp < m) kept.push_back(t);
    Vec z = ring->reduce(w, w.normalize(std::move(kept)));
    if (!z.isZero()) out.numerator.push_back(std::move(z));
  }
  return out;
}

}  // namespace hwprobe
