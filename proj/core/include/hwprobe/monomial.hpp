#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace hwprobe {

/// Maximum number of ring variables. Exponents of unused slots stay zero.
inline constexpr int kMaxVars = 16;

/// Exponent vector with its cached weighted degree.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::int32_t degree = 0;

  bool operator==(const Monomial& other) const {
    return degree == other.degree && exp == other.exp;
  }
  bool isOne() const { return degree == 0; }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i)
    r.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
  r.degree = a.degree + b.degree;
  return r;
}

/// True when a | b.
inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.degree > b.degree) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

/// b / a; requires divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i)
    r.exp[i] = static_cast<std::uint16_t>(b.exp[i] - a.exp[i]);
  r.degree = b.degree - a.degree;
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  return true;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exp) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

enum class OrderKind {
  /// Weighted degree first, ties broken reverse-lexicographically.
  WeightedRevLex,
  /// Pure lexicographic with x_1 > x_2 > ... .
  Lex,
};

/// Three-way comparison of monomials (1: a > b, -1: a < b, 0: equal).
inline int compareMonomials(OrderKind kind, const Monomial& a,
                            const Monomial& b) {
  if (kind == OrderKind::WeightedRevLex) {
    if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    return 0;
  }
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
  return 0;
}

}  // namespace hwprobe
