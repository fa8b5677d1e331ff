#include "extri/search.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "extri/errors.hpp"

namespace extri {

namespace {

using Mask = std::uint64_t;

std::vector<int> bits_of(Mask m, std::size_t n) {
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i)
    if (m >> i & 1) out.push_back(static_cast<int>(i));
  return out;
}

Mask mask_of(const Multiset& ms) {
  Mask m = 0;
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (ms[i] > 0) m |= Mask{1} << i;
  return m;
}

class Search {
 public:
  Search(const AmbientPtr& ambient, const SubcontextSearchOptions& options, const ContextOptions& context_options)
      : amb_(ambient), opt_(options), ctx_opt_(context_options), n_(ambient->size()) {
    if (n_ > 64) throw BudgetExceeded("subcategory search supports at most 64 ambient objects");
    ctx_opt_.kmax = std::max(ctx_opt_.kmax, opt_.ct_degree);
    middle_.assign(n_ * n_, 0);
    involved_.resize(n_);
    for (std::size_t c = 0; c < n_; ++c)
      for (std::size_t a = 0; a < n_; ++a) {
        Mask m = 0;
        for (const auto& ms : amb_->middles(static_cast<int>(c), static_cast<int>(a))) m |= mask_of(ms);
        middle_[c * n_ + a] = m;
        for (std::size_t o = 0; o < n_; ++o)
          if (m >> o & 1) involved_[o].emplace_back(static_cast<int>(c), static_cast<int>(a));
      }
  }

  SubcontextSearchReport run() {
    complements(0, opt_.budget, 0);
    report_.frontier = opt_.budget;
    generators();
    std::sort(report_.hits.begin(), report_.hits.end(), [](const SubcontextHit& a, const SubcontextHit& b) {
      return std::tie(a.members, a.x) < std::tie(b.members, b.x);
    });
    return std::move(report_);
  }

 private:
  Mask full() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }

  /// The complement of `removed` is extension closed iff no removed object
  /// occurs in a middle term of a class between two kept objects.
  bool complement_closed(Mask removed) const {
    for (std::size_t t = 0; t < n_; ++t) {
      if (!(removed >> t & 1)) continue;
      for (auto [c, a] : involved_[t])
        if (!(removed >> c & 1) && !(removed >> a & 1)) return false;
    }
    return true;
  }

  void complements(std::size_t start, int left, Mask removed) {
    ++report_.complements_examined;
    if (complement_closed(removed)) examine(full() & ~removed, "complement");
    if (left == 0) return;
    for (std::size_t x = start; x < n_; ++x) complements(x + 1, left - 1, removed | Mask{1} << x);
  }

  Mask extension_closure(Mask s) const {
    while (true) {
      Mask next = s;
      for (std::size_t c = 0; c < n_; ++c) {
        if (!(s >> c & 1)) continue;
        for (std::size_t a = 0; a < n_; ++a)
          if (s >> a & 1) next |= middle_[c * n_ + a];
      }
      if (next == s) return s;
      s = next;
    }
  }

  void generators() {
    if (opt_.generator_samples <= 0 || n_ == 0) return;
    std::vector<Mask> shifts(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const Representation& m = amb_->object(static_cast<int>(i)).module;
      shifts[i] = mask_of(amb_->identify(syzygy(m))) | mask_of(amb_->identify(cosyzygy(m)));
    }
    std::mt19937_64 rng(opt_.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n_ - 1);
    const std::size_t g = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, opt_.generator_size)), n_);
    for (int s = 0; s < opt_.generator_samples; ++s) {
      Mask gens = 0;
      while (static_cast<std::size_t>(__builtin_popcountll(gens)) < g) gens |= Mask{1} << pick(rng);
      Mask seed = gens;
      for (std::size_t i = 0; i < n_; ++i)
        if (gens >> i & 1) seed |= shifts[i];
      ++report_.generator_sets_examined;
      examine(extension_closure(seed), "generators");
    }
  }

  void examine(Mask members, const char* origin) {
    if (!seen_.insert(members).second) return;
    ++report_.closed;
    std::vector<int> mem = bits_of(members, n_);
    Context ctx = Context::sub(amb_, mem, ctx_opt_);
    std::size_t forced = Subcat(ctx.size(), ctx.projectives()).unite(Subcat(ctx.size(), ctx.injectives())).size();
    ++report_.forced_sizes[forced];
    if (!ctx.enough_projectives() || !ctx.enough_injectives()) return;
    ++report_.with_enough;
    if (forced > static_cast<std::size_t>(opt_.ct_size)) return;
    ++report_.size_compatible;

    Checker checker(ctx, opt_.check);
    const int d = opt_.ct_degree;
    auto found = checker.enumerate_cluster_tilting(d, opt_.ct_size);
    if (found.empty()) return;
    std::optional<TheoremReport> theorem;
    if (opt_.verify_theorem && d >= 2) theorem = checker.verify_theorem(d - 1);
    for (const auto& x : found) {
      SubcontextHit hit;
      hit.members = mem;
      for (int l : x.members()) hit.x.push_back(ctx.ambient_index(l));
      hit.origin = origin;
      hit.cluster_tilting = checker.check_cluster_tilting(x, d);
      if (d >= 2) hit.cotorsion = checker.check_cotorsion(x, x, d - 1);
      if (theorem) {
        hit.theorem_checked = true;
        auto in = [&](const std::vector<Subcat>& v) { return std::find(v.begin(), v.end(), x) != v.end(); };
        hit.theorem_equal = theorem->equal && in(theorem->cluster_tilting) && in(theorem->cotorsion);
      }
      report_.hits.push_back(std::move(hit));
    }
  }

  AmbientPtr amb_;
  SubcontextSearchOptions opt_;
  ContextOptions ctx_opt_;
  std::size_t n_;
  std::vector<Mask> middle_;
  std::vector<std::vector<std::pair<int, int>>> involved_;
  std::set<Mask> seen_;
  SubcontextSearchReport report_;
};

}  // namespace

SubcontextSearchReport search_cluster_tilting_subcontexts(const AmbientPtr& ambient,
                                                          const SubcontextSearchOptions& options,
                                                          const ContextOptions& context_options) {
  if (options.ct_degree < 2) throw Error("cluster tilting degree must be at least 2");
  if (options.budget < 0) throw Error("budget must be nonnegative");
  return Search(ambient, options, context_options).run();
}

}  // namespace extri
