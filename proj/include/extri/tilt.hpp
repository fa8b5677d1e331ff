#pragma once

#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "extri/context.hpp"

namespace extri {

/// A set of indecomposables of a context, read as its additive closure.
class Subcat {
 public:
  Subcat() = default;
  Subcat(std::size_t universe, std::vector<int> members);
  static Subcat all(std::size_t universe);

  std::size_t universe() const { return in_.size(); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int i) const { return in_[static_cast<std::size_t>(i)] == '1'; }
  const std::vector<int>& members() const { return members_; }
  /// One character per object, '1' for members; used as a cache key.
  std::string key() const { return std::string(in_.begin(), in_.end()); }

  bool subset_of(const Subcat& other) const;
  Subcat unite(const Subcat& other) const;

  friend bool operator==(const Subcat& a, const Subcat& b) { return a.in_ == b.in_; }
  friend bool operator<(const Subcat& a, const Subcat& b) {
    if (a.members_.size() != b.members_.size()) return a.members_.size() < b.members_.size();
    return a.members_ < b.members_;
  }

 private:
  std::vector<char> in_;
  std::vector<int> members_;
};

/// resdim and coresdim return this when no resolution of length <= bound is
/// found.
inline constexpr int kUnbounded = INT_MAX;

enum class Side { Left, Right };

struct CheckOptions {
  /// Cross-check the greedy approximation constructions with a search over
  /// every map from sums with multiplicities <= mmax.
  bool exhaustive = false;
  int mmax = 2;
  /// Depth limit for resolution-dimension searches.
  int bound = 4;
  std::size_t max_maps = 4096;
  std::uint64_t max_subsets = std::uint64_t{1} << 20;
};

/// K -> X -> C (left) or C -> Y -> L (right) used for one object.
struct ConflationRecord {
  int object = -1;
  Multiset middle;
  Multiset third;
  int dimension = 0;  // resdim of K, coresdim of L, or kUnbounded
  bool fallback = false;
};

struct Witness {
  int object = -1;
  int partner = -1;
  int degree = 0;
  std::string detail;
};

struct ClauseResult {
  std::string clause;
  bool pass = true;
  /// "checked", or how a structural clause was discharged.
  std::string basis = "checked";
  std::optional<Witness> witness;
  std::vector<ConflationRecord> conflations;
};

struct Verdict {
  std::string kind;  // left-cotorsion, right-cotorsion, cotorsion, cluster-tilting
  int n = 0;
  Subcat x, y;
  bool pass = true;
  bool used_fallback = false;
  std::vector<ClauseResult> clauses;
};

struct TheoremReport {
  int n = 0;
  std::vector<Subcat> cluster_tilting;  // (n+1)-cluster tilting
  std::vector<Subcat> cotorsion;        // (X, X) n-cotorsion
  bool equal = false;
  std::vector<Verdict> verdicts;        // for each set in either list
};

struct ContainmentReport {
  Subcat left;     // intersection of the left orthogonals, k = 1..n
  Subcat wedge;    // X^wedge_{n-1}
  Subcat right;    // left 1-orthogonal of the wedge
  bool holds = true;
  int violator = -1;
};

struct EquivalenceReport {
  bool verdict = false;      // checker result for the left n-cotorsion pair
  bool formulation = false;  // X equals the orthogonal intersection and clause 3 holds
  Subcat intersection;
  bool agree() const { return verdict == formulation; }
};

/// Checkers for cotorsion pairs and cluster tilting subcategories in one
/// context. Caches approximations and resolution dimensions; not thread safe.
class Checker {
 public:
  explicit Checker(const Context& ctx, CheckOptions options = {});

  const Context& context() const { return ctx_; }
  const CheckOptions& options() const { return options_; }

  /// Right: objects N with E^k(X, N) = 0; left: M with E^k(M, X) = 0, for
  /// every k in [k_from, k_to].
  Subcat orthogonal(const Subcat& x, Side side, int k_from, int k_to) const;

  /// Least m <= bound such that c has an X-resolution of length m.
  int resdim(const Subcat& x, int c, int bound) const;
  int coresdim(const Subcat& x, int c, int bound) const;
  /// Along the approximation chain only, or by search only.
  int resdim_greedy(const Subcat& x, int c, int bound) const;
  int resdim_exhaustive(const Subcat& x, int c, int bound) const;
  int coresdim_greedy(const Subcat& x, int c, int bound) const;
  int coresdim_exhaustive(const Subcat& x, int c, int bound) const;
  /// Maximum over the summands of a sum; 0 for the zero object.
  int resdim_of(const Subcat& x, const Multiset& m, int bound) const;
  int coresdim_of(const Subcat& x, const Multiset& m, int bound) const;

  Subcat wedge(const Subcat& x, int m) const;
  Subcat vee(const Subcat& x, int m) const;

  Verdict check_left_cotorsion(const Subcat& x, const Subcat& y, int n) const;
  Verdict check_right_cotorsion(const Subcat& x, const Subcat& y, int n) const;
  Verdict check_cotorsion(const Subcat& x, const Subcat& y, int n) const;
  /// Degree d >= 2: X equals both its right and left orthogonals over
  /// 1 <= k <= d - 1.
  Verdict check_cluster_tilting(const Subcat& x, int d) const;

  /// Subsets containing every projective and injective, by increasing size;
  /// only those with `only_size` members when it is nonnegative.
  std::vector<Subcat> enumerate_cluster_tilting(int d, int only_size = -1) const;
  std::vector<Subcat> enumerate_cotorsion_diagonal(int n, int only_size = -1) const;
  TheoremReport verify_theorem(int n) const;

  ContainmentReport verify_lemma_32(const Subcat& x, int n) const;
  EquivalenceReport verify_lemma_33(const Subcat& x, const Subcat& y, int n) const;

 private:
  using Approx = Context::Approx;
  const std::optional<Approx>& approximation(const Subcat& x, int c, Side side) const;
  const std::vector<Multiset>& third_terms(const Subcat& x, int c, Side side) const;
  /// Greedy follows approximations; Search tries every bounded map;
  /// Combined takes the better of both at each step.
  enum class Mode { Greedy, Search, Combined };
  Mode default_mode() const { return options_.exhaustive ? Mode::Combined : Mode::Greedy; }
  int dimension(const Subcat& x, int c, int bound, Side side, Mode mode) const;
  int dimension_of(const Subcat& x, const Multiset& m, int bound, Side side) const;
  bool vanishing(const Subcat& x, const Subcat& y, int n, Witness* witness) const;
  bool cluster_tilting_fast(const Subcat& x, int d) const;
  ClauseResult approximation_clause(const Subcat& x, const Subcat& y, int n, Side side) const;
  std::vector<Subcat> enumerate(bool (Checker::*accept)(const Subcat&, int) const, int degree, int only_size) const;
  bool diagonal_cotorsion_fast(const Subcat& x, int n) const;
  void require_degree(int k) const;

  const Context& ctx_;
  CheckOptions options_;
  mutable std::map<std::tuple<std::string, int, int>, std::optional<Approx>> approx_cache_;
  mutable std::map<std::tuple<std::string, int, int>, std::vector<Multiset>> third_cache_;
  mutable std::map<std::tuple<std::string, int, int, int, Mode>, int> dim_cache_;
};

}  // namespace extri
