#pragma once

#include <string>
#include <vector>

#include "extri/matrix.hpp"
#include "extri/quiver.hpp"

namespace extri {

/// A finite-dimensional left module over a bound quiver algebra, given as a
/// vector space per vertex and a linear map per arrow. For an arrow a: s -> t,
/// arrows[a] is a dims[t] x dims[s] matrix; a path acts by composing its
/// arrows in traversal order.
struct Representation {
  AlgebraPtr algebra;
  std::vector<int> dims;
  std::vector<Matrix> arrows;

  std::uint32_t p() const { return algebra->p(); }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  /// Matrix of the action of `path` (dims[target] x dims[source]).
  Matrix path_action(const Path& path) const;
  bool satisfies_relations() const;
  /// Exact serialization; equal keys mean identical matrices.
  std::string key() const;
};

/// Per-vertex blocks of a module homomorphism; blocks[v] is
/// target.dims[v] x source.dims[v]. Source and target are carried by the
/// caller, which keeps hom bases cheap to pass around.
struct ModuleMap {
  std::vector<Matrix> blocks;

  bool is_zero() const;
  bool operator==(const ModuleMap&) const = default;
};

Representation zero_representation(const AlgebraPtr& alg);
Representation make_representation(const AlgebraPtr& alg, std::vector<int> dims, std::vector<Matrix> arrows);

Representation simple_module(const AlgebraPtr& alg, int v);
/// P_v: basis = basis paths with source v, arrows act by appending.
Representation projective_module(const AlgebraPtr& alg, int v);
/// I_v: dual of the span of basis paths with target v.
Representation injective_module(const AlgebraPtr& alg, int v);

ModuleMap zero_map(const Representation& from, const Representation& to);
ModuleMap identity_map(const Representation& m);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap add(const ModuleMap& a, const ModuleMap& b);
ModuleMap scale(const ModuleMap& a, Scalar c);
ModuleMap linear_combination(const std::vector<ModuleMap>& maps, const std::vector<Scalar>& coeffs,
                             const Representation& from, const Representation& to);
bool is_homomorphism(const Representation& from, const Representation& to, const ModuleMap& f);

/// Concatenation of all blocks; used to compare and span maps.
std::vector<Scalar> flatten(const ModuleMap& f);
ModuleMap unflatten(const std::vector<Scalar>& v, const Representation& from, const Representation& to);
std::size_t map_length(const Representation& from, const Representation& to);

struct DirectSum {
  Representation sum;
  std::vector<ModuleMap> inclusions;
  std::vector<ModuleMap> projections;
};
DirectSum direct_sum(const AlgebraPtr& alg, const std::vector<Representation>& parts);
/// Map from a direct sum into `to`, given one component per summand.
ModuleMap map_from_sum(const DirectSum& s, const std::vector<ModuleMap>& components, const Representation& to);
/// Map from `from` into a direct sum, given one component per summand.
ModuleMap map_into_sum(const DirectSum& s, const std::vector<ModuleMap>& components, const Representation& from);

/// Basis of Hom(from, to): the nullspace of the intertwining system, in the
/// fixed order of the unknowns (vertex, row, column).
std::vector<ModuleMap> hom_basis(const Representation& from, const Representation& to);
std::size_t hom_dim(const Representation& from, const Representation& to);

struct Kernel {
  Representation module;
  ModuleMap inclusion;
};
struct Cokernel {
  Representation module;
  ModuleMap projection;
  std::vector<Matrix> sections;  // right inverse of the projection per vertex
};
struct Image {
  Representation module;
  ModuleMap onto;       // from -> image
  ModuleMap inclusion;  // image -> to
};

Kernel kernel(const Representation& from, const Representation& to, const ModuleMap& f);
Cokernel cokernel(const Representation& from, const Representation& to, const ModuleMap& f);
Image image(const Representation& from, const Representation& to, const ModuleMap& f);

/// Submodule spanned per vertex by the columns of `basis` (must be invariant).
Kernel submodule(const Representation& m, const std::vector<Matrix>& basis);

/// The unique h: coker(f) -> target with h . projection = g, assuming g
/// vanishes on the image of f.
ModuleMap factor_through_cokernel(const Cokernel& c, const Representation& target, const ModuleMap& g);

bool is_injective_map(const ModuleMap& f);
bool is_surjective_map(const Representation& to, const ModuleMap& f);
bool is_isomorphism_map(const Representation& from, const Representation& to, const ModuleMap& f);

/// Radical: sum of the images of all arrows.
Kernel radical(const Representation& m);
/// Socle: common kernel of all arrows leaving each vertex.
Kernel socle(const Representation& m);
std::vector<int> top_dims(const Representation& m);
std::vector<int> socle_dims(const Representation& m);

}  // namespace extri
