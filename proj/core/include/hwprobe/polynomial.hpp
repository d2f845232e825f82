#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hwprobe/poly_ring.hpp"

namespace hwprobe {

/// A polynomial bound to its ring. Arithmetic between polynomials of
/// different rings throws InputError.
class Polynomial {
 public:
  Polynomial(PolyRingPtr ring, Poly poly)
      : ring_(std::move(ring)), poly_(std::move(poly)) {}

  static Polynomial parse(PolyRingPtr ring, std::string_view text) {
    Poly p = parsePoly(*ring, text);
    return Polynomial(std::move(ring), std::move(p));
  }

  const PolyRing& ring() const { return *ring_; }
  const PolyRingPtr& ringPtr() const { return ring_; }
  const Poly& poly() const { return poly_; }

  bool isZero() const { return poly_.isZero(); }
  bool isHomogeneous() const { return ring_->isHomogeneous(poly_); }
  /// Weighted degree if homogeneous, std::nullopt otherwise.
  std::optional<int> homogeneousDegree() const {
    if (poly_.isZero() || !isHomogeneous()) return std::nullopt;
    return poly_.lead().mono.degree;
  }
  std::string toString() const { return ring_->toString(poly_); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.checkSameRing(b);
    return {a.ring_, a.ring_->add(a.poly_, b.poly_)};
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.checkSameRing(b);
    return {a.ring_, a.ring_->sub(a.poly_, b.poly_)};
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.checkSameRing(b);
    return {a.ring_, a.ring_->mul(a.poly_, b.poly_)};
  }
  bool operator==(const Polynomial& other) const {
    return ring_ == other.ring_ && poly_ == other.poly_;
  }

 private:
  void checkSameRing(const Polynomial& other) const {
    if (ring_ != other.ring_) throw InputError("polynomials over different rings");
  }

  PolyRingPtr ring_;
  Poly poly_;
};

/// The maximal term of f under the given order. Throws on the zero polynomial.
Term leadingTerm(const Polynomial& f, OrderKind order);

/// t / u when u divides t, std::nullopt otherwise.
std::optional<Term> termDivide(const PolyRing& ring, const Term& t,
                               const Term& u);

}  // namespace hwprobe
