#include "hwprobe/groebner.hpp"

#include <algorithm>
#include <climits>

#include "hwprobe/error.hpp"

namespace hwprobe {

namespace {
thread_local Limits tlsLimits;
}

const Limits& currentLimits() { return tlsLimits; }

ScopedLimits::ScopedLimits(Limits limits) : saved_(tlsLimits) { tlsLimits = limits; }
ScopedLimits::~ScopedLimits() { tlsLimits = saved_; }

GroebnerBuilder::GroebnerBuilder(FreeModule module, bool track,
                                 std::vector<int> generatorTwists)
    : module_(std::move(module)),
      repModule_(module_.ringPtr(), std::move(generatorTwists)),
      track_(track),
      byComponent_(module_.rank()) {}

int GroebnerBuilder::degreeCeiling() const {
  return maxInputDegree_ + currentLimits().degreeBound * module_.ring().maxWeight();
}

void GroebnerBuilder::addGenerator(const Vec& v, bool idealBlock) {
  const std::size_t index = static_cast<std::size_t>(generatorCount_++);
  if (track_ && index >= static_cast<std::size_t>(repModule_.rank()))
    throw InternalError("tracked generator without a declared twist");
  if (v.isZero()) return;
  if (!module_.isHomogeneous(v)) throw InputError("inhomogeneous generator");
  const int d = module_.degree(v);
  if (!sawInput_ || d > maxInputDegree_) maxInputDegree_ = d;
  sawInput_ = true;
  Item item;
  item.gen = v;
  if (track_) item.rep = repModule_.basis(static_cast<std::uint32_t>(index));
  item.idealBlock = idealBlock;
  queue_.emplace(d, std::move(item));
}

void GroebnerBuilder::completeThrough(int degree) {
  const int ceiling = degreeCeiling();
  while (!queue_.empty() && queue_.begin()->first <= degree) {
    if (queue_.begin()->first > ceiling)
      throw DegreeBoundExceeded(currentLimits().degreeBound);
    Item item = std::move(queue_.begin()->second);
    queue_.erase(queue_.begin());
    process(std::move(item));
  }
}

void GroebnerBuilder::complete() { completeThrough(INT_MAX); }

std::vector<std::size_t> GroebnerBuilder::activeIndices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (!elements_[i].retired) out.push_back(i);
  return out;
}

const GroebnerBuilder::Element* GroebnerBuilder::findReducer(
    const ModTerm& t, std::size_t* index) const {
  for (std::size_t k : byComponent_[t.comp]) {
    const auto& e = elements_[k];
    if (divides(e.v.lead().mono, t.mono)) {
      *index = k;
      return &e;
    }
  }
  return nullptr;
}

Vec GroebnerBuilder::reduce(
    const Vec& v,
    const std::function<void(std::size_t, const Monomial&, Coeff)>& onStep) const {
  const auto& field = module_.ring().field();
  Vec rem;
  Vec cur = v;
  std::size_t skipped = 0;
  while (skipped < cur.terms.size()) {
    const ModTerm lead = cur.terms[skipped];
    std::size_t idx = 0;
    const Element* g = findReducer(lead, &idx);
    if (!g) {
      rem.terms.push_back(lead);
      ++skipped;
      continue;
    }
    if (skipped > 0) {
      cur.terms.erase(cur.terms.begin(), cur.terms.begin() + static_cast<long>(skipped));
      skipped = 0;
    }
    Monomial m = quotient(lead.mono, g->v.lead().mono);
    if (onStep) onStep(idx, m, lead.coef);
    cur = module_.addMultiple(cur, g->v, m, field.neg(lead.coef));
  }
  return rem;
}

std::pair<Vec, Vec> GroebnerBuilder::reduceTracked(const Vec& v, const Vec& rep) const {
  const auto& field = repModule_.ring().field();
  Vec r = rep;
  Vec rem = reduce(v, [&](std::size_t k, const Monomial& m, Coeff c) {
    if (track_) r = repModule_.addMultiple(r, elements_[k].rep, m, field.neg(c));
  });
  return {std::move(rem), std::move(r)};
}

bool GroebnerBuilder::chainCriterion(std::size_t i, std::size_t j,
                                     const Monomial& lcm) const {
  const auto& ring = module_.ring();
  const Monomial& mi = elements_[i].v.lead().mono;
  const Monomial& mj = elements_[j].v.lead().mono;
  for (std::size_t k : byComponent_[elements_[i].v.lead().comp]) {
    if (k == i || k == j) continue;
    const Monomial& mk = elements_[k].v.lead().mono;
    if (!divides(mk, lcm)) continue;
    if (ring.lcm(mi, mk) == lcm || ring.lcm(mj, mk) == lcm) continue;
    return true;
  }
  return false;
}

void GroebnerBuilder::process(Item item) {
  const auto& field = module_.ring().field();
  if (item.isPair) {
    const auto& a = elements_[item.i];
    const auto& b = elements_[item.j];
    if (a.retired || b.retired) return;
    if (a.pureIdeal && b.pureIdeal) return;
    const Monomial& ma = a.v.lead().mono;
    const Monomial& mb = b.v.lead().mono;
    if (module_.rank() == 1 && coprime(ma, mb)) return;
    Monomial lcm = module_.ring().lcm(ma, mb);
    if (chainCriterion(item.i, item.j, lcm)) return;
    Monomial ua = quotient(lcm, ma);
    Monomial ub = quotient(lcm, mb);
    Vec s = module_.addMultiple(module_.mulTerm(a.v, ua, 1), b.v, ub, field.neg(1));
    Vec rep;
    if (track_)
      rep = repModule_.addMultiple(repModule_.mulTerm(a.rep, ua, 1), b.rep, ub,
                                   field.neg(1));
    auto [rem, r] = reduceTracked(s, rep);
    insert(std::move(rem), std::move(r), false);
    return;
  }
  bool changed = false;
  Vec rep = item.rep;
  Vec rem = reduce(item.gen, [&](std::size_t k, const Monomial& m, Coeff c) {
    changed = true;
    if (track_) rep = repModule_.addMultiple(rep, elements_[k].rep, m, field.neg(c));
  });
  insert(std::move(rem), std::move(rep), item.idealBlock && !changed);
}

void GroebnerBuilder::insert(Vec v, Vec rep, bool pureIdeal) {
  if (v.isZero()) return;
  const auto& field = module_.ring().field();
  Coeff c = field.inv(v.lead().coef);
  if (c != 1) {
    v = module_.scale(v, c);
    if (track_) rep = repModule_.scale(rep, c);
  }
  const std::uint32_t comp = v.lead().comp;
  const Monomial lead = v.lead().mono;
  auto& bucket = byComponent_[comp];
  // Elements whose leading term the new one divides become redundant; they
  // are queued again so that their remainder is not lost.
  for (auto it = bucket.begin(); it != bucket.end();) {
    auto& old = elements_[*it];
    if (divides(lead, old.v.lead().mono)) {
      old.retired = true;
      Item again;
      again.gen = old.v;
      again.rep = old.rep;
      again.idealBlock = old.pureIdeal;
      queue_.emplace(module_.degree(old.v), std::move(again));
      it = bucket.erase(it);
    } else {
      ++it;
    }
  }
  const std::size_t k = elements_.size();
  elements_.push_back(Element{std::move(v), std::move(rep), pureIdeal, false});
  for (std::size_t other : bucket) {
    Monomial l = module_.ring().lcm(elements_[other].v.lead().mono, lead);
    Item pair;
    pair.isPair = true;
    pair.i = other;
    pair.j = k;
    queue_.emplace(l.degree + module_.twist(comp), std::move(pair));
  }
  bucket.push_back(k);
}

Vec GroebnerBasis::normalForm(const Vec& v) const {
  return hwprobe::normalForm(module, v, elements);
}

std::vector<Monomial> GroebnerBasis::leadMonomials(std::uint32_t comp) const {
  std::vector<Monomial> out;
  for (const auto& e : elements)
    if (e.lead().comp == comp) out.push_back(e.lead().mono);
  return out;
}

Vec normalForm(const FreeModule& module, const Vec& v,
               const std::vector<Vec>& divisors) {
  const auto& field = module.ring().field();
  Vec rem;
  Vec cur = v;
  std::size_t skipped = 0;
  while (skipped < cur.terms.size()) {
    const ModTerm lead = cur.terms[skipped];
    const Vec* g = nullptr;
    for (const auto& d : divisors) {
      if (d.isZero()) continue;
      if (d.lead().comp == lead.comp && divides(d.lead().mono, lead.mono)) {
        g = &d;
        break;
      }
    }
    if (!g) {
      rem.terms.push_back(lead);
      ++skipped;
      continue;
    }
    if (skipped > 0) {
      cur.terms.erase(cur.terms.begin(), cur.terms.begin() + static_cast<long>(skipped));
      skipped = 0;
    }
    Monomial m = quotient(lead.mono, g->lead().mono);
    Coeff c = field.div(lead.coef, g->lead().coef);
    cur = module.addMultiple(cur, *g, m, field.neg(c));
  }
  return rem;
}

GroebnerBasis buchberger(const FreeModule& module, const std::vector<Vec>& generators,
                         const std::vector<bool>& idealBlock) {
  GroebnerBuilder builder(module);
  for (std::size_t i = 0; i < generators.size(); ++i)
    builder.addGenerator(generators[i], i < idealBlock.size() && idealBlock[i]);
  builder.complete();
  std::vector<Vec> basis;
  for (std::size_t i : builder.activeIndices()) basis.push_back(builder.elements()[i].v);
  // Inter-reduce tails; leading terms are already minimal.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<Vec> others;
    others.reserve(basis.size() - 1);
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (j != i) others.push_back(basis[j]);
    Vec tail = basis[i];
    ModTerm lead = tail.terms.front();
    tail.terms.erase(tail.terms.begin());
    Vec reduced = normalForm(module, tail, others);
    reduced.terms.insert(reduced.terms.begin(), lead);
    basis[i] = std::move(reduced);
  }
  std::sort(basis.begin(), basis.end(), [&](const Vec& a, const Vec& b) {
    return module.compare(a.lead(), b.lead()) > 0;
  });
  return GroebnerBasis{module, std::move(basis)};
}

namespace {

bool strictChain(const PolyRing& ring, const std::vector<Vec>& g,
                 const std::vector<std::size_t>& sameComp, std::size_t a,
                 std::size_t b, const Monomial& lcm) {
  const Monomial& ma = g[a].lead().mono;
  const Monomial& mb = g[b].lead().mono;
  for (std::size_t k : sameComp) {
    if (k == a || k == b) continue;
    const Monomial& mk = g[k].lead().mono;
    if (!divides(mk, lcm)) continue;
    if (ring.lcm(ma, mk) == lcm || ring.lcm(mb, mk) == lcm) continue;
    return true;
  }
  return false;
}

}  // namespace

SyzygyModule syzygies(const GroebnerBasis& basis) {
  const auto& module = basis.module;
  const auto& ring = module.ring();
  const auto& field = ring.field();
  const auto& g = basis.elements;
  std::vector<std::uint32_t> comps;
  std::vector<Monomial> monos;
  for (const auto& e : g) {
    comps.push_back(e.lead().comp);
    monos.push_back(e.lead().mono);
  }
  FreeModule source = FreeModule::schreyer(module, comps, monos);
  std::vector<std::vector<std::size_t>> byComp(module.rank());
  for (std::size_t i = 0; i < g.size(); ++i) byComp[g[i].lead().comp].push_back(i);

  std::vector<Vec> out;
  for (const auto& bucket : byComp) {
    for (std::size_t x = 0; x < bucket.size(); ++x) {
      for (std::size_t y = x + 1; y < bucket.size(); ++y) {
        std::size_t a = bucket[x], b = bucket[y];
        Monomial lcm = ring.lcm(monos[a], monos[b]);
        if (strictChain(ring, g, bucket, a, b, lcm)) continue;
        Monomial ua = quotient(lcm, monos[a]);
        Monomial ub = quotient(lcm, monos[b]);
        Coeff ca = field.inv(g[a].lead().coef);
        Coeff cb = field.neg(field.inv(g[b].lead().coef));
        Vec s = module.addMultiple(module.mulTerm(g[a], ua, ca), g[b], ub, cb);
        std::vector<ModTerm> terms{{ua, static_cast<std::uint32_t>(a), ca},
                                   {ub, static_cast<std::uint32_t>(b), cb}};
        // Reduce S with quotient bookkeeping; remainder must vanish.
        Vec cur = s;
        while (!cur.isZero()) {
          const ModTerm lead = cur.lead();
          std::size_t k = 0;
          bool found = false;
          for (std::size_t cand : byComp[lead.comp]) {
            if (divides(monos[cand], lead.mono)) {
              k = cand;
              found = true;
              break;
            }
          }
          if (!found) throw InternalError("S-vector of a Groebner basis did not reduce to zero");
          Monomial m = quotient(lead.mono, monos[k]);
          Coeff c = field.div(lead.coef, g[k].lead().coef);
          cur = module.addMultiple(cur, g[k], m, field.neg(c));
          terms.push_back({m, static_cast<std::uint32_t>(k), field.neg(c)});
        }
        Vec syz = source.normalize(std::move(terms));
        if (!syz.isZero()) out.push_back(std::move(syz));
      }
    }
  }
  return SyzygyModule{std::move(source), std::move(out)};
}

std::vector<Vec> generatorSyzygies(const FreeModule& module,
                                   const std::vector<Vec>& generators,
                                   const std::vector<int>& generatorTwists,
                                   const std::vector<bool>& idealBlock) {
  GroebnerBuilder builder(module, true, generatorTwists);
  for (std::size_t i = 0; i < generators.size(); ++i)
    builder.addGenerator(generators[i], i < idealBlock.size() && idealBlock[i]);
  builder.complete();
  const FreeModule& repModule = builder.repModule();
  const auto& field = module.ring().field();
  const auto& ring = module.ring();
  const auto& elems = builder.elements();
  std::vector<std::size_t> active = builder.activeIndices();

  std::vector<Vec> g;
  g.reserve(active.size());
  for (std::size_t i : active) g.push_back(elems[i].v);
  std::vector<std::vector<std::size_t>> byComp(module.rank());
  for (std::size_t i = 0; i < g.size(); ++i) byComp[g[i].lead().comp].push_back(i);

  std::vector<Vec> out;
  auto accumulate = [&](Vec& target, std::size_t k, const Monomial& m, Coeff c) {
    target = repModule.addMultiple(target, elems[active[k]].rep, m, c);
  };
  for (const auto& bucket : byComp) {
    for (std::size_t x = 0; x < bucket.size(); ++x) {
      for (std::size_t y = x + 1; y < bucket.size(); ++y) {
        std::size_t a = bucket[x], b = bucket[y];
        if (elems[active[a]].pureIdeal && elems[active[b]].pureIdeal) continue;
        const Monomial& ma = g[a].lead().mono;
        const Monomial& mb = g[b].lead().mono;
        Monomial lcm = ring.lcm(ma, mb);
        if (strictChain(ring, g, bucket, a, b, lcm)) continue;
        Monomial ua = quotient(lcm, ma);
        Monomial ub = quotient(lcm, mb);
        Vec cur = module.addMultiple(module.mulTerm(g[a], ua, 1), g[b], ub, field.neg(1));
        Vec syz;
        accumulate(syz, a, ua, 1);
        accumulate(syz, b, ub, field.neg(1));
        while (!cur.isZero()) {
          const ModTerm lead = cur.lead();
          std::size_t k = 0;
          bool found = false;
          for (std::size_t cand : byComp[lead.comp]) {
            if (divides(g[cand].lead().mono, lead.mono)) {
              k = cand;
              found = true;
              break;
            }
          }
          if (!found) throw InternalError("S-vector did not reduce to zero");
          Monomial m = quotient(lead.mono, g[k].lead().mono);
          cur = module.addMultiple(cur, g[k], m, field.neg(lead.coef));
          accumulate(syz, k, m, field.neg(lead.coef));
        }
        if (!syz.isZero()) out.push_back(std::move(syz));
      }
    }
  }
  // Each original generator expressed through the basis: e_l - T*u_l.
  for (std::size_t l = 0; l < generators.size(); ++l) {
    Vec syz = repModule.basis(static_cast<std::uint32_t>(l));
    if (!generators[l].isZero()) {
      Vec cur = generators[l];
      while (!cur.isZero()) {
        const ModTerm lead = cur.lead();
        std::size_t k = 0;
        bool found = false;
        for (std::size_t cand : byComp[lead.comp]) {
          if (divides(g[cand].lead().mono, lead.mono)) {
            k = cand;
            found = true;
            break;
          }
        }
        if (!found) throw InternalError("generator not in its own span");
        Monomial m = quotient(lead.mono, g[k].lead().mono);
        cur = module.addMultiple(cur, g[k], m, field.neg(lead.coef));
        accumulate(syz, k, m, field.neg(lead.coef));
      }
    }
    if (!syz.isZero()) out.push_back(std::move(syz));
  }
  return out;
}

std::optional<Vec> liftThrough(const FreeModule& module,
                               const std::vector<Vec>& generators, const Vec& v) {
  std::vector<int> twists;
  twists.reserve(generators.size());
  for (const auto& g : generators) twists.push_back(g.isZero() ? 0 : module.degree(g));
  GroebnerBuilder builder(module, true, twists);
  for (const auto& g : generators) builder.addGenerator(g);
  builder.complete();
  auto [rem, rep] = builder.reduceTracked(v, Vec{});
  if (!rem.isZero()) return std::nullopt;
  return builder.repModule().scale(rep, module.ring().field().neg(1));
}

}  // namespace hwprobe
