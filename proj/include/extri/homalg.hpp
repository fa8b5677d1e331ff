#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "extri/representation.hpp"

namespace extri {

/// Epimorphism from a projective module; `vertices` lists the top vertex of
/// each indecomposable summand of `module` in order.
struct ProjectiveCover {
  Representation module;
  ModuleMap map;
  std::vector<int> vertices;
};

/// Monomorphism into an injective module; `vertices` lists the socle vertex
/// of each indecomposable summand.
struct InjectiveHull {
  Representation module;
  ModuleMap map;
  std::vector<int> vertices;
};

/// Minimal: the kernel of the map lies in the radical.
ProjectiveCover projective_cover(const Representation& m);
/// Minimal: the image of the socle is the socle.
InjectiveHull injective_hull(const Representation& m);

Representation syzygy(const Representation& m);
Representation cosyzygy(const Representation& m);

bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

/// One step of a minimal projective resolution: P_k covers Omega^k M, and
/// Omega^{k+1} M embeds in P_k.
struct ResolutionStep {
  Representation projective;
  ModuleMap cover;       // P_k -> Omega^k M
  Representation next;   // Omega^{k+1} M
  ModuleMap inclusion;   // Omega^{k+1} M -> P_k
};

/// A minimal projective resolution truncated after `steps.size()` terms.
struct Resolution {
  Representation target;
  std::vector<ResolutionStep> steps;

  /// Differential d_k: P_k -> P_{k-1} for k >= 1.
  ModuleMap differential(std::size_t k) const;
};

/// Minimal resolution with at least `length` steps, served from a process-wide
/// cache keyed by the exact module.
Resolution minimal_resolution(const Representation& m, std::size_t length);

/// dim Ext^k(m, n) over the algebra; k = 0 gives dim Hom.
std::size_t ext_dim(int k, const Representation& m, const Representation& n);

/// Source, map, and the summands of the source in order. `from_objects[i]`
/// is the index of the object in the input list the summand came from, or
/// -1 for the projective (resp. injective) augmentation.
struct Approximation {
  Representation module;
  ModuleMap map;
  std::vector<Representation> summands;
  std::vector<int> from_objects;
};

/// h: X_0 (+) P -> c where X_0 sums one copy of each object per element of a
/// hom basis into c and P is the projective cover of c (when `augment`).
Approximation right_approximation(const std::vector<Representation>& objects, const Representation& c,
                                  bool augment = true);
/// Dual: c -> X^0 (+) I(c).
Approximation left_approximation(const std::vector<Representation>& objects, const Representation& c,
                                 bool augment = true);

/// Right minimal X-approximation of c for indecomposable objects: hom basis
/// components that lie in the span of the others composed with maps between
/// the objects are dropped until none is redundant. By Nakayama's lemma an
/// irredundant generating set is minimal, so the source has no summand on
/// which the map vanishes.
Approximation minimal_right_approximation(const std::vector<Representation>& objects, const Representation& c);
Approximation minimal_left_approximation(const std::vector<Representation>& objects, const Representation& c);

/// Direct sum of the non-projective indecomposable summands of m.
Representation strip_projective_summands(const Representation& m, std::uint64_t seed = 0);

/// Drops all entries from the resolution cache.
void clear_resolution_cache();

}  // namespace extri
