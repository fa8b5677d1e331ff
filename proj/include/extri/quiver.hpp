#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extri/matrix.hpp"

namespace extri {

struct Arrow {
  std::string name;
  int source = 0;  // vertex index, not the user-facing id
  int target = 0;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<int> vertex_ids, std::vector<Arrow> arrows);

  std::size_t num_vertices() const { return vertex_ids_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::vector<int>& vertex_ids() const { return vertex_ids_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int a) const { return arrows_[static_cast<std::size_t>(a)]; }

  /// Index of the vertex with user id `id`, or -1.
  int vertex_index(int id) const;
  int arrow_index(std::string_view name) const;

 private:
  std::vector<int> vertex_ids_;
  std::vector<Arrow> arrows_;
  std::map<int, int> vertex_lookup_;
  std::map<std::string, int, std::less<>> arrow_lookup_;
};

/// A path read left to right: arrows[0] is traversed first.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;
  std::size_t length() const { return arrows.size(); }
};

/// Formal linear combination of parallel paths of equal length.
struct Relation {
  std::vector<std::pair<Scalar, std::vector<int>>> terms;
};

/// Sparse coordinate vector over the path basis.
using SparseVec = std::vector<std::pair<int, Scalar>>;

struct AlgebraOptions {
  std::size_t max_path_length = 64;
  std::size_t max_paths_per_degree = 200000;
};

/// kQ/I for an admissible ideal I generated by homogeneous relations. The
/// path basis is built degree by degree as a prefix-closed set of paths; every
/// other path has a unique normal form in that basis, obtained by pure linear
/// algebra in each degree.
class BoundQuiverAlgebra {
 public:
  static std::shared_ptr<const BoundQuiverAlgebra> build(Quiver quiver, std::uint32_t p,
                                                         std::vector<Relation> relations,
                                                         const AlgebraOptions& options = {});

  const Quiver& quiver() const { return quiver_; }
  const PrimeField& field() const { return field_; }
  std::uint32_t p() const { return field_.p(); }
  const std::vector<Relation>& relations() const { return relations_; }

  std::size_t num_vertices() const { return quiver_.num_vertices(); }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(int i) const { return basis_[static_cast<std::size_t>(i)]; }
  /// Basis paths starting (resp. ending) at vertex index v, in basis order.
  const std::vector<int>& basis_from(int v) const { return from_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& basis_to(int v) const { return to_[static_cast<std::size_t>(v)]; }
  /// Smallest N with every path of length N zero.
  std::size_t loewy_length() const { return loewy_length_; }

  /// Normal form of basis path `s` followed by arrow `b`.
  const SparseVec& append_arrow(int s, int b) const;
  /// Normal form of arrow `a` followed by basis path `s`.
  SparseVec prepend_arrow(int a, int s) const;
  /// Normal form of an arbitrary path starting at vertex index `source`.
  SparseVec normal_form(int source, const std::vector<int>& arrows) const;

  std::string path_name(const Path& p) const;
  /// Canonical text form (round-trips through parse_algebra).
  std::string to_text() const;
  /// FNV-1a of to_text(); printed in reports to identify the algebra.
  std::uint64_t hash() const;

 private:
  BoundQuiverAlgebra() = default;

  Quiver quiver_;
  PrimeField field_;
  std::vector<Relation> relations_;
  std::vector<Path> basis_;
  std::vector<std::vector<int>> from_;
  std::vector<std::vector<int>> to_;
  // right_[s][b]: normal form of basis path s followed by arrow b
  std::vector<std::vector<SparseVec>> right_;
  std::size_t loewy_length_ = 0;
};

using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

/// Parses the line-oriented algebra language:
///   field <p> ; vertices <id>... ; arrow <name>: <src> -> <tgt> ;
///   relation <term> (+ <term>)*   with term = [coef*] a*b*c
/// Statements end at a newline or ';'. '#' starts a comment.
/// `field_override`, when nonzero, replaces the declared characteristic.
AlgebraPtr parse_algebra(std::string_view text, std::uint32_t field_override = 0,
                         const AlgebraOptions& options = {});

/// Cyclic quiver 1 -> 2 -> ... -> n -> 1 with all paths of length r zero.
AlgebraPtr nakayama_cyclic(int n, int r, std::uint32_t p = 2);

/// Linearly oriented A_n (1 -> 2 -> ... -> n) modulo paths of length r.
AlgebraPtr linear_nakayama(int n, int r, std::uint32_t p = 2);

}  // namespace extri
