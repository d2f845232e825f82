#include "hwprobe/free_module.hpp"

#include <algorithm>

#include "hwprobe/error.hpp"

namespace hwprobe {

struct FreeModule::SchreyerData {
  FreeModule base;
  std::vector<std::uint32_t> leadComps;
  std::vector<Monomial> leadMonos;
};

FreeModule::FreeModule(PolyRingPtr ring, std::vector<int> twists)
    : ring_(std::move(ring)), twists_(std::move(twists)) {}

FreeModule FreeModule::schreyer(const FreeModule& base,
                                std::vector<std::uint32_t> leadComps,
                                std::vector<Monomial> leadMonos) {
  std::vector<int> twists;
  twists.reserve(leadComps.size());
  for (std::size_t i = 0; i < leadComps.size(); ++i)
    twists.push_back(leadMonos[i].degree + base.twist(leadComps[i]));
  FreeModule f(base.ring_, std::move(twists));
  f.schreyer_ = std::make_shared<SchreyerData>(
      SchreyerData{base, std::move(leadComps), std::move(leadMonos)});
  return f;
}

int FreeModule::compare(std::uint32_t ca, const Monomial& ma, std::uint32_t cb,
                        const Monomial& mb) const {
  if (schreyer_) {
    const auto& s = *schreyer_;
    int c = s.base.compare(s.leadComps[ca], ma * s.leadMonos[ca], s.leadComps[cb],
                           mb * s.leadMonos[cb]);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  int da = ma.degree + twists_[ca];
  int db = mb.degree + twists_[cb];
  if (da != db) return da > db ? 1 : -1;
  int c = ring_->compare(ma, mb);
  if (c != 0) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

Vec FreeModule::basis(std::uint32_t comp) const { return term(comp, Monomial{}, 1); }

Vec FreeModule::term(std::uint32_t comp, const Monomial& m, Coeff c) const {
  Vec v;
  if (c != 0) v.terms.push_back({m, comp, c});
  return v;
}

Vec FreeModule::addMultiple(const Vec& f, const Vec& g, const Monomial& m,
                            Coeff c) const {
  if (c == 0 || g.isZero()) return f;
  const auto& field = ring_->field();
  Vec r;
  r.terms.reserve(f.terms.size() + g.terms.size());
  auto i = f.terms.begin();
  auto j = g.terms.begin();
  const bool unitMono = m.isOne();
  while (j != g.terms.end()) {
    Monomial gm = unitMono ? j->mono : j->mono * m;
    int cmp = i == f.terms.end() ? -1 : compare(i->comp, i->mono, j->comp, gm);
    if (cmp > 0) {
      r.terms.push_back(*i++);
    } else if (cmp < 0) {
      r.terms.push_back({gm, j->comp, field.mul(j->coef, c)});
      ++j;
    } else {
      Coeff s = field.add(i->coef, field.mul(j->coef, c));
      if (s != 0) r.terms.push_back({gm, j->comp, s});
      ++i;
      ++j;
    }
  }
  r.terms.insert(r.terms.end(), i, f.terms.end());
  return r;
}

Vec FreeModule::sub(const Vec& f, const Vec& g) const {
  return addMultiple(f, g, Monomial{}, ring_->field().neg(1));
}

Vec FreeModule::scale(const Vec& f, Coeff c) const {
  Vec r;
  if (c == 0) return r;
  r.terms = f.terms;
  for (auto& t : r.terms) t.coef = ring_->field().mul(t.coef, c);
  return r;
}

Vec FreeModule::mulTerm(const Vec& f, const Monomial& m, Coeff c) const {
  Vec r;
  if (c == 0) return r;
  r.terms.reserve(f.terms.size());
  for (const auto& t : f.terms)
    r.terms.push_back({t.mono * m, t.comp, ring_->field().mul(t.coef, c)});
  return r;
}

Vec FreeModule::mulPoly(const Vec& f, const Poly& p) const {
  Vec r;
  for (const auto& t : p.terms) r = addMultiple(r, f, t.mono, t.coef);
  return r;
}

Vec FreeModule::normalize(std::vector<ModTerm> terms) const {
  std::sort(terms.begin(), terms.end(),
            [this](const ModTerm& a, const ModTerm& b) { return compare(a, b) > 0; });
  Vec r;
  for (const auto& t : terms) {
    if (!r.terms.empty() && r.terms.back().comp == t.comp &&
        r.terms.back().mono == t.mono) {
      r.terms.back().coef = ring_->field().add(r.terms.back().coef, t.coef);
      if (r.terms.back().coef == 0) r.terms.pop_back();
    } else if (t.coef != 0) {
      r.terms.push_back(t);
    }
  }
  return r;
}

bool FreeModule::isHomogeneous(const Vec& v) const {
  if (v.isZero()) return true;
  int d = degree(v.lead());
  for (const auto& t : v.terms)
    if (degree(t) != d) return false;
  return true;
}

Vec FreeModule::fromColumn(std::span<const Poly> entries) const {
  if (static_cast<int>(entries.size()) != rank())
    throw InputError("column length does not match free module rank");
  std::vector<ModTerm> terms;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (const auto& t : entries[i].terms)
      terms.push_back({t.mono, static_cast<std::uint32_t>(i), t.coef});
  return normalize(std::move(terms));
}

std::vector<Poly> FreeModule::toColumn(const Vec& v) const {
  std::vector<std::vector<Term>> parts(rank());
  for (const auto& t : v.terms) parts[t.comp].push_back({t.mono, t.coef});
  std::vector<Poly> out;
  out.reserve(rank());
  for (auto& p : parts) out.push_back(ring_->normalize(std::move(p)));
  return out;
}

Poly FreeModule::component(const Vec& v, std::uint32_t comp) const {
  std::vector<Term> part;
  for (const auto& t : v.terms)
    if (t.comp == comp) part.push_back({t.mono, t.coef});
  return ring_->normalize(std::move(part));
}

std::string FreeModule::toString(const Vec& v) const {
  if (v.isZero()) return "0";
  auto cols = toColumn(v);
  std::string s = "(";
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) s += ", ";
    s += ring_->toString(cols[i]);
  }
  return s + ")";
}

}  // namespace hwprobe
