#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hwprobe/field.hpp"
#include "hwprobe/monomial.hpp"

namespace hwprobe {

struct Term {
  Monomial mono;
  Coeff coef = 0;
};

/// Sparse polynomial; terms sorted strictly decreasing in the ring's order,
/// no zero coefficients. Only meaningful together with its PolyRing.
struct Poly {
  std::vector<Term> terms;

  bool isZero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
  bool operator==(const Poly& other) const {
    if (terms.size() != other.terms.size()) return false;
    for (std::size_t i = 0; i < terms.size(); ++i)
      if (!(terms[i].mono == other.terms[i].mono) ||
          terms[i].coef != other.terms[i].coef)
        return false;
    return true;
  }
};

/// Weighted polynomial ring k[x_1..x_n] over a prime field with a monomial
/// order. Immutable; shared between every object built over it.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> names,
           std::vector<int> weights,
           OrderKind order = OrderKind::WeightedRevLex);

  const PrimeField& field() const { return field_; }
  int numVars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  OrderKind order() const { return order_; }
  int maxWeight() const;

  /// Same variables and field, different monomial order.
  std::shared_ptr<const PolyRing> withOrder(OrderKind order) const;

  Monomial monomial(std::span<const int> exponents) const;
  Monomial variable(int index, int power = 1) const;
  Monomial one() const { return Monomial{}; }
  int weightedDegree(const Monomial& m) const;
  /// Every monomial of weighted degree d, in no particular order.
  std::vector<Monomial> monomialsOfDegree(int d) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  int compare(const Monomial& a, const Monomial& b) const {
    return compareMonomials(order_, a, b);
  }

  // Polynomial arithmetic. Results are normalized.
  Poly constant(std::int64_t c) const;
  Poly fromTerm(const Monomial& m, Coeff c) const;
  Poly var(int index) const { return fromTerm(variable(index), 1); }
  Poly add(const Poly& f, const Poly& g) const;
  Poly sub(const Poly& f, const Poly& g) const;
  Poly neg(const Poly& f) const;
  Poly scale(const Poly& f, Coeff c) const;
  Poly mulTerm(const Poly& f, const Monomial& m, Coeff c) const;
  Poly mul(const Poly& f, const Poly& g) const;
  Poly pow(const Poly& f, int e) const;
  /// f + c * m * g, the workhorse of reduction.
  Poly addMultiple(const Poly& f, const Poly& g, const Monomial& m,
                   Coeff c) const;
  /// Sorts and merges an arbitrary term list into normal form.
  Poly normalize(std::vector<Term> terms) const;

  /// Weighted degree when homogeneous, otherwise std::nullopt encoded as -1
  /// via isHomogeneous(). The zero polynomial is homogeneous of every degree.
  bool isHomogeneous(const Poly& f) const;
  int degree(const Poly& f) const;  // max weighted degree; -1 for zero

  std::string toString(const Monomial& m) const;
  std::string toString(const Poly& f) const;

  /// Index of the variable with the given name, or -1.
  int variableIndex(const std::string& name) const;

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  OrderKind order_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// Polynomial grammar: integers, variable names, ^, *, +, -, parentheses.
/// Whitespace is ignored. Throws ParseError naming the offending token.
Poly parsePoly(const PolyRing& ring, std::string_view text,
               std::size_t line = 1);

}  // namespace hwprobe
