#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hwprobe/groebner.hpp"
#include "hwprobe/hilbert.hpp"

namespace hwprobe {

/// Outcome of the bounded irreducibility scan of a principal ideal.
enum class DomainScan { Irreducible, Reducible, Unchecked, NotPrincipal, PolynomialRing };

std::string toString(DomainScan scan);

/// R = S/I for a homogeneous ideal I of the ambient polynomial ring S.
class QuotientRing {
 public:
  /// Throws InputError on inhomogeneous generators, or when the domain
  /// assertion contradicts a factorization found by the scan.
  static std::shared_ptr<const QuotientRing> create(PolyRingPtr ambient,
                                                    std::vector<Poly> idealGenerators,
                                                    bool assertDomain = false);

  const PolyRing& ambient() const { return *ambient_; }
  const PolyRingPtr& ambientPtr() const { return ambient_; }
  const std::vector<Poly>& idealGenerators() const { return generators_; }
  /// Reduced Groebner basis of I.
  const std::vector<Poly>& idealBasis() const { return basis_; }
  int dimension() const { return dimension_; }
  int numVars() const { return ambient_->numVars(); }

  bool isPolynomialRing() const { return basis_.empty(); }
  bool isHypersurface() const { return basis_.size() == 1; }
  /// Hypersurfaces and polynomial rings.
  bool isGorenstein() const { return basis_.size() <= 1; }
  bool isDomain() const { return domain_; }
  bool domainAsserted() const { return asserted_; }
  DomainScan domainScan() const { return scan_; }
  /// The defining equation of a hypersurface.
  const Poly& equation() const;

  Poly reduce(const Poly& p) const;
  Vec reduce(const FreeModule& f, const Vec& v) const;
  bool isZero(const Poly& p) const { return reduce(p).isZero(); }
  /// I * F: every basis element of I times every basis vector of F.
  std::vector<Vec> idealBlock(const FreeModule& f) const;
  const HilbertSeries& hilbertSeries() const { return series_; }

 private:
  QuotientRing() = default;

  PolyRingPtr ambient_;
  std::vector<Poly> generators_;
  std::vector<Poly> basis_;
  std::vector<Vec> basisVecs_;
  HilbertSeries series_;
  int dimension_ = 0;
  bool domain_ = false;
  bool asserted_ = false;
  DomainScan scan_ = DomainScan::Unchecked;
};

using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

/// Bounded search for a factorization of a homogeneous polynomial.
DomainScan scanIrreducible(const PolyRing& ring, const Poly& f,
                           std::size_t candidateBudget = 200000);

}  // namespace hwprobe
