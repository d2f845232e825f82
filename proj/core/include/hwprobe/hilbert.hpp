#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hwprobe/groebner.hpp"

namespace hwprobe {

/// Integer Laurent polynomial in t.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, std::int64_t coef = 1);

  bool isZero() const { return coefs_.empty(); }
  int lowDegree() const { return low_; }
  int highDegree() const { return low_ + static_cast<int>(coefs_.size()) - 1; }
  std::int64_t coef(int exponent) const;
  std::int64_t valueAtOne() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly shifted(int by) const;
  bool operator==(const LaurentPoly& o) const {
    return low_ == o.low_ && coefs_ == o.coefs_;
  }

  /// Exact quotient by (1 - t^w); std::nullopt when not divisible.
  std::optional<LaurentPoly> divideByOneMinusPower(int w) const;
  std::string toString() const;

 private:
  void trim();
  int low_ = 0;
  std::vector<std::int64_t> coefs_;
};

/// Hilbert series numerator(t) / prod_i (1 - t^{w_i}) of a graded module
/// over the ambient polynomial ring with variable weights w_i.
struct HilbertSeries {
  LaurentPoly numerator;
  std::vector<int> weights;

  bool isZero() const { return numerator.isZero(); }
  /// Krull dimension of the module; -1 for the zero module.
  int dimension() const;
  /// Total vector-space dimension; std::nullopt when infinite.
  std::optional<std::int64_t> length() const;
  /// Graded dimensions for degrees lo..hi inclusive.
  std::vector<std::int64_t> values(int lo, int hi) const;
  /// p(1) where numerator = (1-t)^k p(t) and p(1) != 0. Proportional to the
  /// multiplicity among modules of equal dimension.
  std::int64_t reducedValueAtOne() const;

  HilbertSeries operator+(const HilbertSeries& o) const { return {numerator + o.numerator, weights}; }
  HilbertSeries operator-(const HilbertSeries& o) const { return {numerator - o.numerator, weights}; }
  /// Series of M(a): generator degrees lowered by a.
  HilbertSeries twisted(int a) const { return {numerator.shifted(-a), weights}; }
  bool operator==(const HilbertSeries& o) const { return numerator == o.numerator; }
};

/// Numerator of the Hilbert series of S/J for the monomial ideal J.
LaurentPoly monomialQuotientNumerator(const PolyRing& ring,
                                      std::vector<Monomial> generators);

/// Hilbert series of F/U where `basis` is a Groebner basis of U.
HilbertSeries hilbertSeries(const GroebnerBasis& basis);

}  // namespace hwprobe
