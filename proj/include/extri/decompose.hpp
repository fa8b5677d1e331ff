#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "extri/representation.hpp"

namespace extri {

struct Summand {
  Representation module;
  int multiplicity = 1;
};

/// Splits m into indecomposable pieces (with repetition) by Fitting's lemma
/// applied to random endomorphisms. Every returned piece carries a verified
/// locality certificate; DecompositionFailure is thrown rather than returning
/// an uncertified piece.
std::vector<Representation> split_indecomposables(const Representation& m, std::mt19937_64& rng);

/// Indecomposable summands up to isomorphism, with multiplicities, sorted by
/// (total dimension, dimension vector, fingerprint).
std::vector<Summand> decompose(const Representation& m, std::uint64_t seed = 0);

/// True iff End(m) is local, established by the same certificate used in
/// decompose.
bool is_indecomposable(const Representation& m, std::uint64_t seed = 0);

bool is_isomorphic(const Representation& a, const Representation& b, std::uint64_t seed = 0);

/// Isomorphism-invariant summary: dimension vector, top and socle dimension
/// vectors, dim End, and the rank of every basis path acting on the module.
/// Equal fingerprints do not imply isomorphism; callers confirm with
/// is_isomorphic.
std::string fingerprint(const Representation& m);

/// Isomorphism test for two indecomposables: they are isomorphic iff some
/// composite g.f of hom basis elements a -> b -> a is invertible, because the
/// non-units of a local ring form a subspace.
bool indecomposables_isomorphic(const Representation& a, const Representation& b);

}  // namespace extri
