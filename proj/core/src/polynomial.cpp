#include "hwprobe/polynomial.hpp"

namespace hwprobe {

Term leadingTerm(const Polynomial& f, OrderKind order) {
  if (f.isZero()) throw InputError("leading term of the zero polynomial");
  const Term* best = &f.poly().terms.front();
  for (const auto& t : f.poly().terms)
    if (compareMonomials(order, t.mono, best->mono) > 0) best = &t;
  return *best;
}

std::optional<Term> termDivide(const PolyRing& ring, const Term& t,
                               const Term& u) {
  if (u.coef == 0 || !divides(u.mono, t.mono)) return std::nullopt;
  return Term{quotient(t.mono, u.mono), ring.field().div(t.coef, u.coef)};
}

}  // namespace hwprobe
