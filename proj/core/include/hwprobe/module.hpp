#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hwprobe/hilbert.hpp"
#include "hwprobe/matrix.hpp"
#include "hwprobe/quotient_ring.hpp"

namespace hwprobe {

/// Groebner basis of the submodule generated by `gens` plus I*F.
GroebnerBasis submoduleBasis(const QuotientRing& ring, const FreeModule& f,
                             const std::vector<Vec>& gens);

/// Syzygies over R of the given columns of F, as vectors of the free module
/// with twists `columnDegrees`, reduced modulo I. Not minimal.
std::vector<Vec> syzygiesOver(const QuotientRing& ring, const FreeModule& f,
                              const std::vector<Vec>& columns,
                              const std::vector<int>& columnDegrees);

/// A minimal generating subset (chosen greedily by degree) of the image of
/// `candidates` in F / (modulo + I*F).
std::vector<Vec> minimalGenerators(const QuotientRing& ring, const FreeModule& f,
                                   std::vector<Vec> candidates,
                                   const std::vector<Vec>& modulo = {});

/// Pivots on degree-0 unit entries (column operations only), deletes their
/// rows and columns, then drops redundant columns. `keptRows` receives the
/// surviving generator indices.
Matrix minimalizePresentation(const QuotientRing& ring, const Matrix& p,
                              std::vector<int>* keptRows = nullptr);

/// Finitely presented graded module M = coker(P : F1 -> F0) over R. The
/// generator degrees are the row degrees of P. Derived data (relation
/// basis, Hilbert series, resolution prefix) is memoized; copies share it.
class PresentedModule {
 public:
  PresentedModule() = default;

  /// Validates homogeneity and stores the minimalized presentation.
  static PresentedModule present(QuotientRingPtr ring, const Matrix& presentation,
                                 std::vector<int>* keptRows = nullptr);
  /// Stores a presentation already known to be minimal.
  static PresentedModule fromMinimal(QuotientRingPtr ring, Matrix presentation);
  static PresentedModule freeModule(QuotientRingPtr ring, std::vector<int> twists);
  /// R/J generated in degree `twist`.
  static PresentedModule quotient(QuotientRingPtr ring, const std::vector<Poly>& ideal,
                                  int twist = 0);

  const QuotientRing& ring() const { return *ring_; }
  const QuotientRingPtr& ringPtr() const { return ring_; }
  const Matrix& presentation() const { return p_; }
  const std::vector<int>& generatorDegrees() const { return p_.rowDegrees(); }
  int numGenerators() const { return p_.rows(); }
  int numRelations() const { return p_.cols(); }
  bool isZero() const { return p_.rows() == 0; }
  /// True when the minimal presentation has no relations.
  bool isFree() const { return p_.cols() == 0; }
  FreeModule generatorModule() const { return p_.target(); }

  /// M(a): every generator degree lowered by a.
  PresentedModule twisted(int a) const;

  /// Groebner basis of im(P) + I*F0.
  const GroebnerBasis& relationBasis() const;
  const HilbertSeries& hilbertSeries() const;
  /// d_i of the minimal free resolution (d_1 = P), computed on demand.
  Matrix differential(int i) const;

 private:
  struct Cache {
    std::recursive_mutex mutex;
    std::optional<GroebnerBasis> basis;
    std::optional<HilbertSeries> series;
    std::vector<Matrix> differentials;
  };

  QuotientRingPtr ring_;
  Matrix p_;
  std::shared_ptr<Cache> cache_;
};

/// Z / B for submodules B of Z of a free module F over R.
struct Subquotient {
  QuotientRingPtr ring;
  FreeModule ambient;
  std::vector<Vec> numerator;
  std::vector<Vec> denominator;

  HilbertSeries hilbertSeries() const;
  bool isZero() const { return hilbertSeries().isZero(); }
  std::optional<std::int64_t> length() const { return hilbertSeries().length(); }
  /// Presentation on minimal generators of Z modulo B; `generators`
  /// receives their vectors in F.
  PresentedModule toModule(std::vector<Vec>* generators = nullptr) const;
};

/// Homology at a spot A of a complex of free modules after tensoring with
/// N: ker(outgoing (x) N) / im(incoming (x) N). `incoming` maps into A and
/// `outgoing` maps out of A; either may have zero columns/rows.
Subquotient homologyAt(const QuotientRingPtr& ring, const std::vector<int>& spotDegrees,
                       const Matrix& incoming, const Matrix& outgoing,
                       const PresentedModule& n);

}  // namespace hwprobe
