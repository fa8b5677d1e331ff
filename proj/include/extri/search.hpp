#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "extri/tilt.hpp"

namespace extri {

struct SubcontextSearchOptions {
  int ct_size = 6;
  int ct_degree = 4;
  /// Complements of at most this many objects are enumerated exhaustively.
  int budget = 6;
  /// Seeded generator sets whose extension closures are also examined.
  int generator_samples = 256;
  int generator_size = 3;
  std::uint64_t seed = 0;
  bool verify_theorem = true;
  CheckOptions check;
};

struct SubcontextHit {
  std::vector<int> members;  // ambient indices of the extension-closed subcategory
  std::vector<int> x;        // ambient indices of the cluster tilting set
  std::string origin;        // "complement" or "generators"
  Verdict cluster_tilting;
  Verdict cotorsion;         // (X, X) at n = degree - 1
  bool theorem_checked = false;
  bool theorem_equal = false;
};

struct SubcontextSearchReport {
  std::size_t complements_examined = 0;
  std::size_t generator_sets_examined = 0;
  std::size_t closed = 0;            // distinct extension-closed candidates
  std::size_t with_enough = 0;       // of those, with enough projectives and injectives
  std::size_t size_compatible = 0;   // of those, with |P u I| <= ct_size
  int frontier = 0;                  // largest complement size fully enumerated
  std::map<std::size_t, std::size_t> forced_sizes;  // |P u I| histogram
  std::vector<SubcontextHit> hits;
};

/// Searches extension-closed subcategories of the ambient for cluster tilting
/// sets of a given size and degree. Candidates are all complements of at most
/// `budget` objects, plus extension closures of seeded generator sets with
/// their syzygies and cosyzygies. Every hit is cross-checked with the
/// cotorsion checker and, when enabled, the full theorem comparison.
SubcontextSearchReport search_cluster_tilting_subcontexts(const AmbientPtr& ambient,
                                                          const SubcontextSearchOptions& options,
                                                          const ContextOptions& context_options = {});

}  // namespace extri
