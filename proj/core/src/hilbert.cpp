#include "hwprobe/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "hwprobe/error.hpp"

namespace hwprobe {

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coef) {
  LaurentPoly p;
  if (coef != 0) {
    p.low_ = exponent;
    p.coefs_.push_back(coef);
  }
  return p;
}

std::int64_t LaurentPoly::coef(int exponent) const {
  if (coefs_.empty() || exponent < low_ || exponent > highDegree()) return 0;
  return coefs_[static_cast<std::size_t>(exponent - low_)];
}

std::int64_t LaurentPoly::valueAtOne() const {
  std::int64_t s = 0;
  for (auto c : coefs_) s += c;
  return s;
}

void LaurentPoly::trim() {
  std::size_t front = 0;
  while (front < coefs_.size() && coefs_[front] == 0) ++front;
  if (front == coefs_.size()) {
    coefs_.clear();
    low_ = 0;
    return;
  }
  std::size_t back = coefs_.size();
  while (coefs_[back - 1] == 0) --back;
  coefs_ = std::vector<std::int64_t>(coefs_.begin() + static_cast<long>(front),
                                     coefs_.begin() + static_cast<long>(back));
  low_ += static_cast<int>(front);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (isZero()) return o;
  if (o.isZero()) return *this;
  LaurentPoly r;
  r.low_ = std::min(low_, o.low_);
  int hi = std::max(highDegree(), o.highDegree());
  r.coefs_.assign(static_cast<std::size_t>(hi - r.low_ + 1), 0);
  for (std::size_t i = 0; i < coefs_.size(); ++i)
    r.coefs_[static_cast<std::size_t>(low_ - r.low_) + i] += coefs_[i];
  for (std::size_t i = 0; i < o.coefs_.size(); ++i)
    r.coefs_[static_cast<std::size_t>(o.low_ - r.low_) + i] += o.coefs_[i];
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly neg = o;
  for (auto& c : neg.coefs_) c = -c;
  return *this + neg;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (isZero() || o.isZero()) return {};
  LaurentPoly r;
  r.low_ = low_ + o.low_;
  r.coefs_.assign(coefs_.size() + o.coefs_.size() - 1, 0);
  for (std::size_t i = 0; i < coefs_.size(); ++i)
    for (std::size_t j = 0; j < o.coefs_.size(); ++j) r.coefs_[i + j] += coefs_[i] * o.coefs_[j];
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly r = *this;
  if (!r.isZero()) r.low_ += by;
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divideByOneMinusPower(int w) const {
  if (isZero()) return LaurentPoly{};
  const int n = static_cast<int>(coefs_.size());
  if (n <= w) return std::nullopt;
  // q_d = n_d + q_{d-w}, then the top w coefficients must cancel.
  std::vector<std::int64_t> q(static_cast<std::size_t>(n - w), 0);
  for (int d = 0; d < n - w; ++d)
    q[static_cast<std::size_t>(d)] = coefs_[static_cast<std::size_t>(d)] +
                                     (d >= w ? q[static_cast<std::size_t>(d - w)] : 0);
  for (int d = n - w; d < n; ++d) {
    std::int64_t v = coefs_[static_cast<std::size_t>(d)] +
                     (d - w >= 0 ? q[static_cast<std::size_t>(d - w)] : 0);
    if (v != 0) return std::nullopt;
  }
  LaurentPoly r;
  r.low_ = low_;
  r.coefs_ = std::move(q);
  r.trim();
  return r;
}

std::string LaurentPoly::toString() const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coefs_.size(); ++i) {
    std::int64_t c = coefs_[i];
    if (c == 0) continue;
    int e = low_ + static_cast<int>(i);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    std::int64_t a = c < 0 ? -c : c;
    if (e == 0) os << a;
    else {
      if (a != 1) os << a << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

namespace {

LaurentPoly oneMinusPower(int w) { return LaurentPoly::monomial(0) - LaurentPoly::monomial(w); }

/// Divides by (1-t) as often as possible; returns the count.
int stripOneMinusT(LaurentPoly& p) {
  int k = 0;
  while (!p.isZero() && p.valueAtOne() == 0) {
    auto q = p.divideByOneMinusPower(1);
    if (!q) throw InternalError("Laurent polynomial vanishing at 1 is not divisible by 1-t");
    p = *q;
    ++k;
  }
  return k;
}

}  // namespace

int HilbertSeries::dimension() const {
  if (numerator.isZero()) return -1;
  LaurentPoly p = numerator;
  int k = stripOneMinusT(p);
  return static_cast<int>(weights.size()) - k;
}

std::int64_t HilbertSeries::reducedValueAtOne() const {
  if (numerator.isZero()) return 0;
  LaurentPoly p = numerator;
  stripOneMinusT(p);
  return p.valueAtOne();
}

std::optional<std::int64_t> HilbertSeries::length() const {
  if (numerator.isZero()) return 0;
  if (dimension() > 0) return std::nullopt;
  LaurentPoly p = numerator;
  for (int w : weights) {
    auto q = p.divideByOneMinusPower(w);
    if (!q) throw InternalError("finite-length Hilbert series failed to divide");
    p = *q;
  }
  return p.valueAtOne();
}

std::vector<std::int64_t> HilbertSeries::values(int lo, int hi) const {
  std::vector<std::int64_t> out;
  if (hi < lo) return out;
  if (numerator.isZero()) return std::vector<std::int64_t>(static_cast<std::size_t>(hi - lo + 1), 0);
  // Power series of 1/prod(1-t^w) up to degree hi - low(numerator).
  int span = hi - numerator.lowDegree();
  if (span < 0) return std::vector<std::int64_t>(static_cast<std::size_t>(hi - lo + 1), 0);
  std::vector<std::int64_t> inv(static_cast<std::size_t>(span + 1), 0);
  inv[0] = 1;
  for (int w : weights)
    for (int d = w; d <= span; ++d) inv[static_cast<std::size_t>(d)] += inv[static_cast<std::size_t>(d - w)];
  for (int d = lo; d <= hi; ++d) {
    std::int64_t v = 0;
    for (int e = numerator.lowDegree(); e <= std::min(d, numerator.highDegree()); ++e)
      v += numerator.coef(e) * inv[static_cast<std::size_t>(d - e)];
    out.push_back(v);
  }
  return out;
}

namespace {

/// Keeps only minimal generators of a monomial ideal.
std::vector<Monomial> minimalize(std::vector<Monomial> g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.exp < b.exp;
  });
  std::vector<Monomial> out;
  for (const auto& m : g) {
    bool redundant = false;
    for (const auto& k : out)
      if (divides(k, m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

LaurentPoly numeratorRec(const PolyRing& ring, std::vector<Monomial> g) {
  g = minimalize(std::move(g));
  if (g.empty()) return LaurentPoly::monomial(0);
  for (const auto& m : g)
    if (m.isOne()) return {};
  // Pick the variable occurring in the most generators that are not pure
  // powers; if every generator is a pure power they are coprime.
  const int n = ring.numVars();
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  bool allPure = true;
  for (const auto& m : g) {
    int support = 0;
    for (int i = 0; i < n; ++i) support += m.exp[static_cast<std::size_t>(i)] > 0;
    if (support > 1) {
      allPure = false;
      for (int i = 0; i < n; ++i) count[static_cast<std::size_t>(i)] += m.exp[static_cast<std::size_t>(i)] > 0;
    }
  }
  if (allPure) {
    LaurentPoly p = LaurentPoly::monomial(0);
    for (const auto& m : g) p = p * oneMinusPower(m.degree);
    return p;
  }
  int pivot = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  Monomial x = ring.variable(pivot);
  // HN(J) = HN(J + (x)) + t^{deg x} HN(J : x)
  std::vector<Monomial> plus;
  plus.push_back(x);
  for (const auto& m : g)
    if (m.exp[static_cast<std::size_t>(pivot)] == 0) plus.push_back(m);
  std::vector<Monomial> colon;
  for (const auto& m : g) {
    if (m.exp[static_cast<std::size_t>(pivot)] > 0) colon.push_back(quotient(m, x));
    else colon.push_back(m);
  }
  return numeratorRec(ring, std::move(plus)) +
         numeratorRec(ring, std::move(colon)).shifted(x.degree);
}

}  // namespace

LaurentPoly monomialQuotientNumerator(const PolyRing& ring, std::vector<Monomial> generators) {
  return numeratorRec(ring, std::move(generators));
}

HilbertSeries hilbertSeries(const GroebnerBasis& basis) {
  const auto& module = basis.module;
  LaurentPoly total;
  for (int c = 0; c < module.rank(); ++c) {
    auto lead = basis.leadMonomials(static_cast<std::uint32_t>(c));
    total = total + monomialQuotientNumerator(module.ring(), std::move(lead))
                        .shifted(module.twist(static_cast<std::uint32_t>(c)));
  }
  return HilbertSeries{std::move(total), module.ring().weights()};
}

}  // namespace hwprobe
