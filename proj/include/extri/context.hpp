#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extri/homalg.hpp"
#include "extri/representation.hpp"

namespace extri {

/// Multiplicity of each object, indexed like the owning object list.
using Multiset = std::vector<int>;

enum class AmbientKind { Exact, Stable };

struct AmbientOptions {
  std::size_t max_objects = 10000;
  /// Exhaustive class enumeration is refused beyond this many classes p^e.
  std::uint64_t max_classes = 4096;
  std::uint64_t seed = 0;
};

struct AmbientObject {
  std::string label;
  std::vector<std::string> aliases;
  Representation module;
  std::string fingerprint;
  bool projective_module = false;
  bool injective_module = false;
};

/// E(C, A) presented by a projective presentation of C: classes are maps
/// Omega C -> A modulo those extending to P(C).
struct ExtSpace {
  Representation c;
  Representation a;
  Representation projective;
  ModuleMap cover;      // P(C) -> C
  Representation syzygy;
  ModuleMap inclusion;  // Omega C -> P(C)
  std::vector<ModuleMap> basis;
};

ExtSpace extension_space(const Representation& c, const Representation& a);

/// 0 -> A -> B -> C -> 0 with B the pushout along the class.
struct ModuleConflation {
  Representation a, b, c;
  ModuleMap x;  // A -> B
  ModuleMap y;  // B -> C
};

ModuleConflation realize(const ExtSpace& e, const std::vector<Scalar>& coefficients);

/// Nonzero coefficient vectors of length `dim` whose first nonzero entry is 1.
std::vector<std::vector<Scalar>> projective_classes(std::uint32_t p, std::size_t dim);

/// The model category: mod of the algebra (exact) or its stable category
/// (triangulated, self-injective algebras only). Holds every indecomposable
/// object up to isomorphism, the E table, and the middle terms of every class
/// between indecomposables. Immutable after construction.
class Ambient {
 public:
  static std::shared_ptr<const Ambient> exact(AlgebraPtr alg, const AmbientOptions& options = {});
  static std::shared_ptr<const Ambient> stable(AlgebraPtr alg, const AmbientOptions& options = {});

  AmbientKind kind() const { return kind_; }
  std::string name() const { return kind_ == AmbientKind::Exact ? "mod" : "stable"; }
  const AlgebraPtr& algebra() const { return alg_; }
  const AmbientOptions& options() const { return options_; }
  std::size_t size() const { return objects_.size(); }
  const AmbientObject& object(int i) const { return objects_[static_cast<std::size_t>(i)]; }
  const std::vector<AmbientObject>& objects() const { return objects_; }

  /// Index of the object with this label or alias, or -1.
  int find_label(std::string_view label) const;
  /// Index of an indecomposable module, or -1 (also for projectives in the
  /// stable model).
  int find(const Representation& indecomposable) const;
  /// Decomposes m into objects; in the stable model projective summands are
  /// zero objects and are dropped. Throws ConsistencyError on a summand that
  /// is not a known object.
  Multiset identify(const Representation& m) const;
  Representation module_of(const Multiset& ms) const;

  std::size_t e_dim(int c, int a) const { return ext_[idx(c, a)].basis.size(); }
  const ExtSpace& ext_space(int c, int a) const { return ext_[idx(c, a)]; }
  /// One entry per class of E(c, a) up to nonzero scalars.
  const std::vector<std::vector<Scalar>>& classes(int c, int a) const { return classes_[idx(c, a)]; }
  const std::vector<Multiset>& middles(int c, int a) const { return middles_[idx(c, a)]; }

  /// Cocone of f: b -> c when f is a deflation of the model: in mod the
  /// kernel of a surjection; in the stable model every map is a deflation
  /// and the cocone is ker((f, pi): b (+) P(c) -> c).
  std::optional<Representation> cocone(const Representation& b, const Representation& c, const ModuleMap& f) const;
  /// Dual: cokernel of an injection, or coker((iota, f): a -> I(a) (+) b).
  std::optional<Representation> cone(const Representation& a, const Representation& b, const ModuleMap& f) const;

 private:
  Ambient() = default;
  std::size_t idx(int c, int a) const {
    return static_cast<std::size_t>(c) * objects_.size() + static_cast<std::size_t>(a);
  }
  void assign_labels();

  AmbientKind kind_ = AmbientKind::Exact;
  AlgebraPtr alg_;
  AmbientOptions options_;
  std::vector<AmbientObject> objects_;
  std::vector<ExtSpace> ext_;
  std::vector<std::vector<std::vector<Scalar>>> classes_;
  std::vector<std::vector<Multiset>> middles_;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

struct ContextOptions {
  /// E^k tables are built for 1 <= k <= kmax.
  int kmax = 4;
};

/// A deflation P -> C from add(projectives) (or C -> I dually) and its cocone.
struct DeflationWitness {
  Multiset source;  // local multiset of the projective (injective) term
  Multiset cocone;  // local multiset of the third term
};

struct ExtensionClosureResult {
  bool closed = true;
  int c = -1, a = -1;          // ambient indices of the failing pair
  std::vector<Scalar> delta;   // the class
  Multiset middle;             // its middle term
  int outside = -1;            // a summand of the middle outside the subset
};

/// Checks every class between indecomposables of `members`; classes of
/// sums are extensions of these, so this suffices.
ExtensionClosureResult check_extension_closed(const Ambient& ambient, const std::vector<int>& members);

/// A finite extriangulated category: an ambient model restricted to an
/// extension-closed set of indecomposables. Objects are addressed by local
/// indices 0..size()-1 in ambient order.
class Context {
 public:
  /// Every object of the ambient.
  static Context whole(AmbientPtr ambient, const ContextOptions& options = {});
  /// Throws NotExtensionClosedError with the first violating class.
  static Context sub(AmbientPtr ambient, std::vector<int> ambient_members, const ContextOptions& options = {});

  std::string kind_name() const { return is_sub_ ? "sub" : ambient_->name(); }
  const Ambient& ambient() const { return *ambient_; }
  const AmbientPtr& ambient_ptr() const { return ambient_; }
  const ContextOptions& options() const { return options_; }
  std::size_t size() const { return members_.size(); }
  int ambient_index(int local) const { return members_[static_cast<std::size_t>(local)]; }
  int local_index(int ambient) const { return local_[static_cast<std::size_t>(ambient)]; }
  const std::vector<int>& members() const { return members_; }
  const std::string& label(int local) const { return ambient_->object(ambient_index(local)).label; }
  const Representation& module(int local) const { return ambient_->object(ambient_index(local)).module; }
  /// Local index for a label or alias, or -1.
  int find_label(std::string_view label) const;
  /// FNV-1a over the algebra hash, the kind, and the member labels.
  std::uint64_t id_hash() const;

  std::size_t e_dim(int c, int a) const { return ambient_->e_dim(ambient_index(c), ambient_index(a)); }
  /// dim E^k(a, b), 1 <= k <= kmax. For k >= 2 requires enough projectives
  /// and injectives; both routes were computed and agree.
  std::size_t e_k(int k, int a, int b) const;
  /// E^k by the syzygy route only (or the cosyzygy route), for cross-checks.
  std::size_t e_k_omega(int k, int a, int b) const;
  std::size_t e_k_sigma(int k, int a, int b) const;

  const std::vector<int>& projectives() const { return projectives_; }
  const std::vector<int>& injectives() const { return injectives_; }
  bool enough_projectives() const { return missing_projective_ < 0; }
  bool enough_injectives() const { return missing_injective_ < 0; }
  /// First object without a deflation from add(projectives), or -1.
  int missing_projective() const { return missing_projective_; }
  int missing_injective() const { return missing_injective_; }
  const DeflationWitness& projective_witness(int i) const { return proj_witness_[static_cast<std::size_t>(i)]; }
  const DeflationWitness& injective_witness(int i) const { return inj_witness_[static_cast<std::size_t>(i)]; }
  /// Omega and Sigma within the context, with context-projective
  /// (resp. injective) summands removed.
  const Multiset& syzygy(int i) const { return syz_[static_cast<std::size_t>(i)]; }
  const Multiset& cosyzygy(int i) const { return cosyz_[static_cast<std::size_t>(i)]; }

  /// Maps an ambient multiset to local indices; nullopt if some summand is
  /// outside the context.
  std::optional<Multiset> to_local(const Multiset& ambient_ms) const;
  Representation module_of(const Multiset& local_ms) const;

  /// Minimal right add(xs)-approximation of c and its cocone. Any deflation
  /// f = g h from add(xs) makes (g, f) a deflation, and (g, f) differs from
  /// (g, 0) by an automorphism, so some deflation from add(xs) onto c exists
  /// iff the approximation is one. Left approximations are dual.
  struct Approx {
    Multiset source;  // local
    Multiset third;   // cocone (right) or cone (left), local
  };
  std::optional<Approx> right_approximation(const std::vector<int>& xs, int c) const;
  std::optional<Approx> left_approximation(const std::vector<int>& xs, int c) const;

  /// Third terms of every deflation X' -> c (inflation c -> X') with
  /// X' = sum of xs[i]^m_i, 0 <= m_i <= mmax. Throws BudgetExceeded if more
  /// than max_maps maps would be visited.
  std::vector<Multiset> all_deflation_cocones(const std::vector<int>& xs, int c, int mmax,
                                              std::size_t max_maps) const;
  std::vector<Multiset> all_inflation_cones(const std::vector<int>& xs, int c, int mmax,
                                            std::size_t max_maps) const;

 private:
  Context(AmbientPtr ambient, std::vector<int> members, bool is_sub, const ContextOptions& options);
  void build();
  std::optional<Multiset> third_term(const Representation& a, const Representation& b, const ModuleMap& f,
                                     bool deflation) const;

  AmbientPtr ambient_;
  std::vector<int> members_;
  std::vector<int> local_;
  bool is_sub_ = false;
  ContextOptions options_;
  std::vector<int> projectives_, injectives_;
  int missing_projective_ = -1, missing_injective_ = -1;
  std::vector<DeflationWitness> proj_witness_, inj_witness_;
  std::vector<Multiset> syz_, cosyz_;
  // ek_omega_[k-1][a * n + b], likewise for sigma
  std::vector<std::vector<std::size_t>> ek_omega_, ek_sigma_;
};

}  // namespace extri
