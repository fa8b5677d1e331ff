#pragma once

#include <vector>

#include "extri/homalg.hpp"
#include "extri/representation.hpp"

namespace extri {

/// Every indecomposable projective is isomorphic to some indecomposable
/// injective.
bool is_self_injective(const AlgebraPtr& alg);

/// A triangle M -> N -> C -> Sigma M of the stable category, realized by the
/// short exact sequence 0 -> M -> I(M) (+) N -> C -> 0.
struct Triangle {
  Representation cone;
  ModuleMap to_cone;   // N -> C
  Representation shift;
  ModuleMap to_shift;  // C -> Sigma M
};

/// The stable module category of a self-injective algebra. Morphisms are
/// module maps modulo those factoring through a projective; since projectives
/// are injective, these are exactly the maps factoring through the injective
/// hull of the source.
class StableCategory {
 public:
  /// Throws NotSelfInjectiveError.
  explicit StableCategory(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }

  /// Basis of the maps m -> n factoring through a projective.
  std::vector<ModuleMap> projectively_factoring(const Representation& m, const Representation& n) const;
  std::size_t stable_hom_dim(const Representation& m, const Representation& n) const;
  /// Representatives of a basis of the stable Hom space, chosen greedily from
  /// the module hom basis.
  std::vector<ModuleMap> stable_hom_basis(const Representation& m, const Representation& n) const;
  bool stably_equal(const Representation& m, const Representation& n, const ModuleMap& f,
                    const ModuleMap& g) const;

  Representation suspension(const Representation& m) const { return cosyzygy(m); }
  Representation loop(const Representation& m) const { return syzygy(m); }

  Triangle cone(const Representation& m, const Representation& n, const ModuleMap& f) const;

 private:
  AlgebraPtr alg_;
};

}  // namespace extri
