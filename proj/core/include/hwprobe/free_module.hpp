#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hwprobe/poly_ring.hpp"

namespace hwprobe {

struct ModTerm {
  Monomial mono;
  std::uint32_t comp = 0;
  Coeff coef = 0;
};

/// Element of a graded free module: terms sorted strictly decreasing in the
/// module order, no zero coefficients. Interpreted through a FreeModule.
struct Vec {
  std::vector<ModTerm> terms;

  bool isZero() const { return terms.empty(); }
  const ModTerm& lead() const { return terms.front(); }
};

/// Graded free module S(-t_1) + ... + S(-t_r) with a module monomial order.
///
/// The default order compares total degree (monomial degree plus twist),
/// then the ring's monomial order, then the component (lower index larger).
/// A Schreyer order compares m*e_i with n*e_j through the images
/// m*LT(g_i), n*LT(g_j) in a base module, breaking ties by index.
class FreeModule {
 public:
  FreeModule(PolyRingPtr ring, std::vector<int> twists);

  /// Schreyer order induced by leading terms (component, monomial) in `base`.
  static FreeModule schreyer(const FreeModule& base,
                             std::vector<std::uint32_t> leadComps,
                             std::vector<Monomial> leadMonos);

  const PolyRing& ring() const { return *ring_; }
  const PolyRingPtr& ringPtr() const { return ring_; }
  int rank() const { return static_cast<int>(twists_.size()); }
  int twist(std::uint32_t comp) const { return twists_[comp]; }
  const std::vector<int>& twists() const { return twists_; }
  bool isSchreyer() const { return schreyer_ != nullptr; }

  int compare(std::uint32_t ca, const Monomial& ma, std::uint32_t cb,
              const Monomial& mb) const;
  int compare(const ModTerm& a, const ModTerm& b) const {
    return compare(a.comp, a.mono, b.comp, b.mono);
  }
  int degree(const ModTerm& t) const { return t.mono.degree + twists_[t.comp]; }

  Vec basis(std::uint32_t comp) const;
  Vec term(std::uint32_t comp, const Monomial& m, Coeff c) const;
  /// f + c*m*g.
  Vec addMultiple(const Vec& f, const Vec& g, const Monomial& m, Coeff c) const;
  Vec add(const Vec& f, const Vec& g) const { return addMultiple(f, g, Monomial{}, 1); }
  Vec sub(const Vec& f, const Vec& g) const;
  Vec scale(const Vec& f, Coeff c) const;
  Vec mulTerm(const Vec& f, const Monomial& m, Coeff c) const;
  Vec mulPoly(const Vec& f, const Poly& p) const;
  Vec normalize(std::vector<ModTerm> terms) const;

  bool isHomogeneous(const Vec& v) const;
  /// Degree of the lead term (the degree of a homogeneous vector).
  int degree(const Vec& v) const { return degree(v.lead()); }

  Vec fromColumn(std::span<const Poly> entries) const;
  std::vector<Poly> toColumn(const Vec& v) const;
  /// Coefficient polynomial of a single component.
  Poly component(const Vec& v, std::uint32_t comp) const;

  std::string toString(const Vec& v) const;

 private:
  struct SchreyerData;

  PolyRingPtr ring_;
  std::vector<int> twists_;
  std::shared_ptr<const SchreyerData> schreyer_;
};

}  // namespace hwprobe
