#pragma once

#include <cstdint>
#include <string>

#include "hwprobe/error.hpp"

namespace hwprobe {

using Coeff = std::uint32_t;

/// Arithmetic in Z/p for a prime 2 <= p < 2^31. Elements are kept in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t characteristic);

  std::uint32_t characteristic() const { return p_; }

  Coeff fromInt(std::int64_t value) const {
    std::int64_t r = value % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Coeff>(r);
  }

  /// Representative in (-p/2, p/2], used for printing.
  std::int64_t toSymmetric(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_
                      : static_cast<std::int64_t>(a);
  }

  Coeff add(Coeff a, Coeff b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }
  Coeff pow(Coeff a, std::uint64_t e) const;

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }

 private:
  std::uint32_t p_;
};

bool isPrime(std::uint64_t n);

}  // namespace hwprobe
