#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "hwprobe/free_module.hpp"

namespace hwprobe {

/// Bounds applied to every Groebner computation started on this thread.
/// `degreeBound` limits how far (in units of the largest variable weight)
/// an S-pair may lie above the highest input degree before the computation
/// aborts with DegreeBoundExceeded.
struct Limits {
  int degreeBound = 40;
};

const Limits& currentLimits();

/// Installs limits for the lifetime of the object (thread-local).
class ScopedLimits {
 public:
  explicit ScopedLimits(Limits limits);
  ~ScopedLimits();
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  Limits saved_;
};

/// Incremental homogeneous Buchberger with the normal selection strategy
/// (lowest degree first). Optionally tracks, for every basis element, its
/// representation in terms of the original generators.
class GroebnerBuilder {
 public:
  struct Element {
    Vec v;
    Vec rep;                 // in the generator module, when tracking
    bool pureIdeal = false;  // an untouched generator flagged as ideal-block
    bool retired = false;
  };

  /// `generatorTwists` must list the degree of every generator that will be
  /// added when tracking; it defines the representation module.
  GroebnerBuilder(FreeModule module, bool track = false,
                  std::vector<int> generatorTwists = {});

  /// Queues a homogeneous generator. Generators flagged `idealBlock` are
  /// assumed to form a Groebner basis among themselves, so their mutual
  /// S-pairs are skipped.
  void addGenerator(const Vec& v, bool idealBlock = false);

  /// Processes every queued generator and S-pair of degree <= `degree`.
  void completeThrough(int degree);
  /// Processes everything; throws DegreeBoundExceeded when an item lies
  /// beyond the active limits.
  void complete();

  /// Full reduction by the active elements. `onStep(index, mono, coef)` is
  /// called for every subtraction v -= coef*mono*element[index].
  Vec reduce(const Vec& v,
             const std::function<void(std::size_t, const Monomial&, Coeff)>&
                 onStep = nullptr) const;
  /// Reduction that also returns the representation of the remainder.
  std::pair<Vec, Vec> reduceTracked(const Vec& v, const Vec& rep) const;

  const FreeModule& module() const { return module_; }
  const FreeModule& repModule() const { return repModule_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::vector<std::size_t> activeIndices() const;
  bool tracking() const { return track_; }
  /// Degree ceiling derived from the limits and the inputs seen so far.
  int degreeCeiling() const;

 private:
  struct Item {
    bool isPair = false;
    std::size_t i = 0, j = 0;
    Vec gen, rep;
    bool idealBlock = false;
  };

  void process(Item item);
  void insert(Vec v, Vec rep, bool pureIdeal);
  bool chainCriterion(std::size_t i, std::size_t j, const Monomial& lcm) const;
  const Element* findReducer(const ModTerm& t, std::size_t* index) const;

  FreeModule module_;
  FreeModule repModule_;
  bool track_;
  std::vector<Element> elements_;
  std::vector<std::vector<std::size_t>> byComponent_;
  std::multimap<int, Item> queue_;
  int generatorCount_ = 0;
  int maxInputDegree_ = 0;
  bool sawInput_ = false;
};

/// A Groebner basis of a homogeneous submodule; elements have leading
/// coefficient 1.
struct GroebnerBasis {
  FreeModule module;
  std::vector<Vec> elements;

  Vec normalForm(const Vec& v) const;
  bool contains(const Vec& v) const { return normalForm(v).isZero(); }
  /// Leading monomials of the elements lying in component `comp`.
  std::vector<Monomial> leadMonomials(std::uint32_t comp) const;
};

/// Reduced Groebner basis of the submodule generated by `generators`.
/// Generators flagged in `idealBlock` must already form a Groebner basis
/// among themselves. Throws InputError on inhomogeneous input.
GroebnerBasis buchberger(const FreeModule& module,
                         const std::vector<Vec>& generators,
                         const std::vector<bool>& idealBlock = {});

/// Division remainder of v by an arbitrary list of divisors (first
/// divisor whose leading term divides wins).
Vec normalForm(const FreeModule& module, const Vec& v,
               const std::vector<Vec>& divisors);

/// Syzygies of the elements of a Groebner basis, as vectors over the free
/// module with one basis vector per element, ordered by the induced
/// Schreyer order. They form a Groebner basis of the syzygy module for that
/// order.
struct SyzygyModule {
  FreeModule source;
  std::vector<Vec> generators;
};
SyzygyModule syzygies(const GroebnerBasis& basis);

/// Generators of the syzygies of an arbitrary list of homogeneous
/// generators, expressed in the free module with one basis vector per
/// generator (twists = `generatorTwists`, which must match the nonzero
/// generators' degrees). Generators flagged in `idealBlock` are a Groebner
/// basis among themselves; syzygies supported only on them may be omitted.
std::vector<Vec> generatorSyzygies(const FreeModule& module,
                                   const std::vector<Vec>& generators,
                                   const std::vector<int>& generatorTwists,
                                   const std::vector<bool>& idealBlock);

/// Representation of v as a combination of the generators when v lies in
/// their span, std::nullopt otherwise.
std::optional<Vec> liftThrough(const FreeModule& module,
                               const std::vector<Vec>& generators,
                               const Vec& v);

}  // namespace hwprobe
