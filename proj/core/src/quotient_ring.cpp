#include "hwprobe/quotient_ring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hwprobe/error.hpp"
#include "hwprobe/linalg.hpp"

namespace hwprobe {

std::string toString(DomainScan scan) {
  switch (scan) {
    case DomainScan::Irreducible: return "irreducible";
    case DomainScan::Reducible: return "reducible";
    case DomainScan::Unchecked: return "unchecked";
    case DomainScan::NotPrincipal: return "not-principal";
    case DomainScan::PolynomialRing: return "polynomial-ring";
  }
  return "unchecked";
}

namespace {

Vec asVec(const FreeModule& line, const Poly& p) {
  return line.fromColumn(std::span<const Poly>(&p, 1));
}

}  // namespace

DomainScan scanIrreducible(const PolyRing& ring, const Poly& f, std::size_t candidateBudget) {
  if (f.isZero()) return DomainScan::Reducible;
  const auto& field = ring.field();
  const int n = ring.numVars();
  // A nontrivial monomial content splits off a variable.
  Monomial content = f.lead().mono;
  for (const auto& t : f.terms)
    for (int i = 0; i < n; ++i)
      content.exp[static_cast<std::size_t>(i)] =
          std::min(content.exp[static_cast<std::size_t>(i)], t.mono.exp[static_cast<std::size_t>(i)]);
  int contentTotal = 0;
  for (int i = 0; i < n; ++i) contentTotal += content.exp[static_cast<std::size_t>(i)];
  int totalLead = 0;
  for (int i = 0; i < n; ++i) totalLead += f.lead().mono.exp[static_cast<std::size_t>(i)];
  if (contentTotal > 0) return f.terms.size() == 1 && totalLead == 1 ? DomainScan::Irreducible
                                                                     : DomainScan::Reducible;
  // Binomial x^a - c*y^b with gcd(a, b) = 1.
  if (f.terms.size() == 2) {
    auto single = [&](const Monomial& m, int* var) {
      int count = 0;
      for (int i = 0; i < n; ++i)
        if (m.exp[static_cast<std::size_t>(i)] > 0) {
          ++count;
          *var = i;
        }
      return count == 1;
    };
    int va = -1, vb = -1;
    if (single(f.terms[0].mono, &va) && single(f.terms[1].mono, &vb)) {
      int a = f.terms[0].mono.exp[static_cast<std::size_t>(va)];
      int b = f.terms[1].mono.exp[static_cast<std::size_t>(vb)];
      if (std::gcd(a, b) == 1) return DomainScan::Irreducible;
    }
  }
  // Quadratic forms of rank >= 3 are irreducible when p != 2.
  bool quadric = field.characteristic() != 2;
  for (const auto& t : f.terms) {
    int total = 0;
    for (int i = 0; i < n; ++i) total += t.mono.exp[static_cast<std::size_t>(i)];
    if (total != 2) quadric = false;
  }
  if (quadric) {
    DenseMatrix a(n, n);
    Coeff half = field.inv(2);
    for (const auto& t : f.terms) {
      std::vector<int> vars;
      for (int i = 0; i < n; ++i)
        for (int e = 0; e < t.mono.exp[static_cast<std::size_t>(i)]; ++e) vars.push_back(i);
      int i = vars[0], j = vars[1];
      if (i == j) a.at(i, i) = t.coef;
      else {
        a.at(i, j) = field.mul(t.coef, half);
        a.at(j, i) = a.at(i, j);
      }
    }
    if (rank(a, field) >= 3) return DomainScan::Irreducible;
  }
  // Brute force: monic homogeneous candidate factors of degree <= deg f / 2.
  const int deg = f.lead().mono.degree;
  const FreeModule line(std::make_shared<const PolyRing>(ring), {0});
  std::size_t spent = 0;
  for (int d = 1; 2 * d <= deg; ++d) {
    auto monos = ring.monomialsOfDegree(d);
    if (monos.empty()) continue;
    std::sort(monos.begin(), monos.end(),
              [&](const Monomial& x, const Monomial& y) { return ring.compare(x, y) > 0; });
    // Enumerate coefficient vectors with the leading coefficient 1.
    for (std::size_t lead = 0; lead < monos.size(); ++lead) {
      const std::size_t free = monos.size() - lead - 1;
      double count = std::pow(static_cast<double>(field.characteristic()), static_cast<double>(free));
      if (static_cast<double>(spent) + count > static_cast<double>(candidateBudget))
        return DomainScan::Unchecked;
      spent += static_cast<std::size_t>(count);
      std::vector<Coeff> digits(free, 0);
      while (true) {
        std::vector<Term> terms{{monos[lead], 1}};
        for (std::size_t k = 0; k < free; ++k)
          if (digits[k]) terms.push_back({monos[lead + 1 + k], digits[k]});
        Poly g = ring.normalize(terms);
        Vec rem = normalForm(line, asVec(line, f), {asVec(line, g)});
        if (rem.isZero()) return DomainScan::Reducible;
        std::size_t k = 0;
        while (k < free && ++digits[k] == field.characteristic()) digits[k++] = 0;
        if (k == free) break;
      }
    }
  }
  return DomainScan::Irreducible;
}

std::shared_ptr<const QuotientRing> QuotientRing::create(PolyRingPtr ambient,
                                                         std::vector<Poly> idealGenerators,
                                                         bool assertDomain) {
  std::shared_ptr<QuotientRing> r(new QuotientRing());
  r->ambient_ = ambient;
  FreeModule line(ambient, {0});
  std::vector<Vec> gens;
  for (const auto& g : idealGenerators) {
    if (g.isZero()) continue;
    if (!ambient->isHomogeneous(g))
      throw InputError("inhomogeneous ideal generator " + ambient->toString(g));
    r->generators_.push_back(g);
    gens.push_back(asVec(line, g));
  }
  GroebnerBasis gb = buchberger(line, gens);
  for (const auto& v : gb.elements) {
    r->basis_.push_back(line.component(v, 0));
    r->basisVecs_.push_back(v);
  }
  r->series_ = hwprobe::hilbertSeries(gb);
  r->dimension_ = r->series_.dimension();
  r->asserted_ = assertDomain;
  if (r->basis_.empty()) r->scan_ = DomainScan::PolynomialRing;
  else if (r->basis_.size() == 1) r->scan_ = scanIrreducible(*ambient, r->basis_[0]);
  else r->scan_ = DomainScan::NotPrincipal;
  if (assertDomain && r->scan_ == DomainScan::Reducible)
    throw InputError("ring asserted to be a domain, but its equation factors");
  r->domain_ = assertDomain || r->scan_ == DomainScan::Irreducible ||
               r->scan_ == DomainScan::PolynomialRing;
  return r;
}

const Poly& QuotientRing::equation() const {
  if (!isHypersurface()) throw HypothesisError("ring is not a hypersurface");
  return basis_[0];
}

Poly QuotientRing::reduce(const Poly& p) const {
  if (basis_.empty() || p.isZero()) return p;
  FreeModule line(ambient_, {0});
  return line.component(normalForm(line, asVec(line, p), basisVecs_), 0);
}

Vec QuotientRing::reduce(const FreeModule& f, const Vec& v) const {
  if (basis_.empty() || v.isZero()) return v;
  auto col = f.toColumn(v);
  for (auto& p : col) p = reduce(p);
  return f.fromColumn(col);
}

std::vector<Vec> QuotientRing::idealBlock(const FreeModule& f) const {
  std::vector<Vec> out;
  for (int c = 0; c < f.rank(); ++c)
    for (const auto& g : basis_) out.push_back(f.mulPoly(f.basis(static_cast<std::uint32_t>(c)), g));
  return out;
}

}  // namespace hwprobe
