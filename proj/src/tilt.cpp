#include "extri/tilt.hpp"

#include <algorithm>

#include "extri/errors.hpp"

namespace extri {

namespace {

std::size_t uz(int x) { return static_cast<std::size_t>(x); }

int plus_one(int d) { return d == kUnbounded ? kUnbounded : d + 1; }

}  // namespace

Subcat::Subcat(std::size_t universe, std::vector<int> members) : in_(universe, 0) {
  for (int m : members) {
    if (m < 0 || uz(m) >= universe) throw UnknownSymbolError("object index " + std::to_string(m) + " out of range");
    in_[uz(m)] = 1;
  }
  for (std::size_t i = 0; i < universe; ++i)
    if (in_[i]) members_.push_back(static_cast<int>(i));
  for (auto& c : in_) c = c ? '1' : '0';
}

Subcat Subcat::all(std::size_t universe) {
  std::vector<int> m(universe);
  for (std::size_t i = 0; i < universe; ++i) m[i] = static_cast<int>(i);
  return Subcat(universe, std::move(m));
}

bool Subcat::subset_of(const Subcat& other) const {
  for (int m : members_)
    if (!other.contains(m)) return false;
  return true;
}

Subcat Subcat::unite(const Subcat& other) const {
  std::vector<int> m = members_;
  m.insert(m.end(), other.members_.begin(), other.members_.end());
  return Subcat(universe(), std::move(m));
}

Checker::Checker(const Context& ctx, CheckOptions options) : ctx_(ctx), options_(options) {}

void Checker::require_degree(int k) const {
  if (k > ctx_.options().kmax) {
    throw Error("degree " + std::to_string(k) + " exceeds the E^k table depth " +
                std::to_string(ctx_.options().kmax) + "; raise --kmax");
  }
}

Subcat Checker::orthogonal(const Subcat& x, Side side, int k_from, int k_to) const {
  require_degree(k_to);
  std::vector<int> out;
  const int n = static_cast<int>(ctx_.size());
  for (int m = 0; m < n; ++m) {
    bool ok = true;
    for (int k = k_from; ok && k <= k_to; ++k)
      for (int a : x.members()) {
        std::size_t e = side == Side::Right ? ctx_.e_k(k, a, m) : ctx_.e_k(k, m, a);
        if (e != 0) {
          ok = false;
          break;
        }
      }
    if (ok) out.push_back(m);
  }
  return Subcat(ctx_.size(), std::move(out));
}

const std::optional<Checker::Approx>& Checker::approximation(const Subcat& x, int c, Side side) const {
  auto key = std::make_tuple(x.key(), c, side == Side::Right ? 0 : 1);
  auto it = approx_cache_.find(key);
  if (it != approx_cache_.end()) return it->second;
  auto ap = side == Side::Right ? ctx_.right_approximation(x.members(), c) : ctx_.left_approximation(x.members(), c);
  return approx_cache_.emplace(key, std::move(ap)).first->second;
}

const std::vector<Multiset>& Checker::third_terms(const Subcat& x, int c, Side side) const {
  auto key = std::make_tuple(x.key(), c, side == Side::Right ? 0 : 1);
  auto it = third_cache_.find(key);
  if (it != third_cache_.end()) return it->second;
  auto terms = side == Side::Right ? ctx_.all_deflation_cocones(x.members(), c, options_.mmax, options_.max_maps)
                                   : ctx_.all_inflation_cones(x.members(), c, options_.mmax, options_.max_maps);
  return third_cache_.emplace(key, std::move(terms)).first->second;
}

int Checker::dimension(const Subcat& x, int c, int bound, Side side, Mode mode) const {
  if (x.contains(c)) return 0;
  if (bound <= 0) return kUnbounded;
  auto key = std::make_tuple(x.key(), c, bound, side == Side::Right ? 0 : 1, mode);
  if (auto it = dim_cache_.find(key); it != dim_cache_.end()) return it->second;

  auto sub = [&](const Multiset& m) {
    int worst = 0;
    for (std::size_t j = 0; j < m.size() && worst != kUnbounded; ++j)
      if (m[j] > 0) worst = std::max(worst, dimension(x, static_cast<int>(j), bound - 1, side, mode));
    return worst;
  };
  int best = kUnbounded;
  if (mode != Mode::Search) {
    if (const auto& ap = approximation(x, c, side)) best = plus_one(sub(ap->third));
  }
  if (mode != Mode::Greedy) {
    for (const auto& t : third_terms(x, c, side)) best = std::min(best, plus_one(sub(t)));
  }
  if (best != kUnbounded && best > bound) best = kUnbounded;
  dim_cache_[key] = best;
  return best;
}

int Checker::resdim_greedy(const Subcat& x, int c, int bound) const {
  return dimension(x, c, bound, Side::Right, Mode::Greedy);
}

int Checker::coresdim_greedy(const Subcat& x, int c, int bound) const {
  return dimension(x, c, bound, Side::Left, Mode::Greedy);
}

int Checker::resdim_exhaustive(const Subcat& x, int c, int bound) const {
  return dimension(x, c, bound, Side::Right, Mode::Search);
}

int Checker::coresdim_exhaustive(const Subcat& x, int c, int bound) const {
  return dimension(x, c, bound, Side::Left, Mode::Search);
}

int Checker::resdim(const Subcat& x, int c, int bound) const {
  return dimension(x, c, bound, Side::Right, default_mode());
}

int Checker::coresdim(const Subcat& x, int c, int bound) const {
  return dimension(x, c, bound, Side::Left, default_mode());
}

int Checker::dimension_of(const Subcat& x, const Multiset& m, int bound, Side side) const {
  int worst = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    worst = std::max(worst, dimension(x, static_cast<int>(j), bound, side, default_mode()));
    if (worst == kUnbounded) break;
  }
  return worst;
}

int Checker::resdim_of(const Subcat& x, const Multiset& m, int bound) const {
  return dimension_of(x, m, bound, Side::Right);
}

int Checker::coresdim_of(const Subcat& x, const Multiset& m, int bound) const {
  return dimension_of(x, m, bound, Side::Left);
}

Subcat Checker::wedge(const Subcat& x, int m) const {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(ctx_.size()); ++c)
    if (resdim(x, c, m) <= m) out.push_back(c);
  return Subcat(ctx_.size(), std::move(out));
}

Subcat Checker::vee(const Subcat& x, int m) const {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(ctx_.size()); ++c)
    if (coresdim(x, c, m) <= m) out.push_back(c);
  return Subcat(ctx_.size(), std::move(out));
}

bool Checker::vanishing(const Subcat& x, const Subcat& y, int n, Witness* witness) const {
  for (int k = 1; k <= n; ++k)
    for (int a : x.members())
      for (int b : y.members())
        if (std::size_t e = ctx_.e_k(k, a, b); e != 0) {
          if (witness) {
            *witness = Witness{a, b, k,
                               "E^" + std::to_string(k) + "(" + ctx_.label(a) + ", " + ctx_.label(b) +
                                   ") has dimension " + std::to_string(e)};
          }
          return false;
        }
  return true;
}

ClauseResult Checker::approximation_clause(const Subcat& x, const Subcat& y, int n, Side side) const {
  // left pairs: K -> X -> C with resdim_Y K <= n-1; right pairs: C -> Y -> L
  // with coresdim_X L <= n-1
  const bool left = side == Side::Left;
  const Subcat& source = left ? x : y;
  const Subcat& measure = left ? y : x;
  const Side approx_side = left ? Side::Right : Side::Left;
  ClauseResult r;
  r.clause = left ? "deflation_resolution" : "inflation_coresolution";
  for (int c = 0; c < static_cast<int>(ctx_.size()); ++c) {
    ConflationRecord rec;
    rec.object = c;
    rec.dimension = kUnbounded;
    const auto& ap = approximation(source, c, approx_side);
    if (ap) {
      rec.middle = ap->source;
      rec.third = ap->third;
      rec.dimension = dimension_of(measure, ap->third, n - 1, approx_side);
    }
    if (rec.dimension > n - 1 && options_.exhaustive) {
      for (const auto& t : third_terms(source, c, approx_side)) {
        int d = dimension_of(measure, t, n - 1, approx_side);
        if (d <= n - 1) {
          rec.middle.clear();
          rec.third = t;
          rec.dimension = d;
          rec.fallback = true;
          break;
        }
      }
    }
    if (rec.dimension > n - 1) {
      r.pass = false;
      Witness w;
      w.object = c;
      w.degree = n - 1;
      if (!ap) {
        w.detail = std::string("no ") + (left ? "deflation from add X onto " : "inflation from ") + ctx_.label(c) +
                   (left ? "" : " into add Y");
      } else {
        w.detail = std::string(left ? "the cocone of the approximation of " : "the cone of the approximation of ") +
                   ctx_.label(c) + (left ? " has Y-resolution" : " has X-coresolution") +
                   " dimension above " + std::to_string(n - 1);
      }
      r.witness = std::move(w);
      r.conflations.push_back(std::move(rec));
      return r;
    }
    r.conflations.push_back(std::move(rec));
  }
  return r;
}

namespace {

ClauseResult summand_clause(const std::string& name) {
  ClauseResult r;
  r.clause = name;
  r.basis = "by representation";
  return r;
}

void finish(Verdict& v) {
  v.pass = true;
  for (const auto& c : v.clauses) {
    v.pass = v.pass && c.pass;
    for (const auto& rec : c.conflations) v.used_fallback = v.used_fallback || rec.fallback;
  }
}

}  // namespace

Verdict Checker::check_left_cotorsion(const Subcat& x, const Subcat& y, int n) const {
  if (n < 1) throw Error("n must be at least 1");
  require_degree(n);
  Verdict v{"left-cotorsion", n, x, y, true, false, {}};
  v.clauses.push_back(summand_clause("summand_closed"));
  ClauseResult van;
  van.clause = "e_vanishing";
  Witness w;
  if (!vanishing(x, y, n, &w)) {
    van.pass = false;
    van.witness = w;
  }
  v.clauses.push_back(std::move(van));
  v.clauses.push_back(approximation_clause(x, y, n, Side::Left));
  finish(v);
  return v;
}

Verdict Checker::check_right_cotorsion(const Subcat& x, const Subcat& y, int n) const {
  if (n < 1) throw Error("n must be at least 1");
  require_degree(n);
  Verdict v{"right-cotorsion", n, x, y, true, false, {}};
  v.clauses.push_back(summand_clause("summand_closed"));
  ClauseResult van;
  van.clause = "e_vanishing";
  Witness w;
  if (!vanishing(x, y, n, &w)) {
    van.pass = false;
    van.witness = w;
  }
  v.clauses.push_back(std::move(van));
  v.clauses.push_back(approximation_clause(x, y, n, Side::Right));
  finish(v);
  return v;
}

Verdict Checker::check_cotorsion(const Subcat& x, const Subcat& y, int n) const {
  if (n < 1) throw Error("n must be at least 1");
  require_degree(n);
  Verdict v{"cotorsion", n, x, y, true, false, {}};
  v.clauses.push_back(summand_clause("summand_closed"));
  ClauseResult van;
  van.clause = "e_vanishing";
  Witness w;
  if (!vanishing(x, y, n, &w)) {
    van.pass = false;
    van.witness = w;
  }
  v.clauses.push_back(std::move(van));
  v.clauses.push_back(approximation_clause(x, y, n, Side::Left));
  v.clauses.push_back(approximation_clause(x, y, n, Side::Right));
  finish(v);
  return v;
}

Verdict Checker::check_cluster_tilting(const Subcat& x, int d) const {
  if (d < 2) throw Error("cluster tilting degree must be at least 2");
  require_degree(d - 1);
  Verdict v{"cluster-tilting", d, x, x, true, false, {}};
  ClauseResult ff;
  ff.clause = "functorially_finite";
  ff.basis = "by finiteness";
  v.clauses.push_back(std::move(ff));

  for (Side side : {Side::Right, Side::Left}) {
    ClauseResult r;
    r.clause = side == Side::Right ? "right_orthogonal" : "left_orthogonal";
    Subcat perp = orthogonal(x, side, 1, d - 1);
    for (int m = 0; m < static_cast<int>(ctx_.size()) && r.pass; ++m) {
      if (x.contains(m) == perp.contains(m)) continue;
      r.pass = false;
      Witness w;
      w.object = m;
      if (x.contains(m)) {
        for (int k = 1; k < d && w.partner < 0; ++k)
          for (int a : x.members()) {
            std::size_t e = side == Side::Right ? ctx_.e_k(k, a, m) : ctx_.e_k(k, m, a);
            if (e != 0) {
              w.partner = a;
              w.degree = k;
              w.detail = ctx_.label(m) + " is in X but E^" + std::to_string(k) + "(" +
                         (side == Side::Right ? ctx_.label(a) + ", " + ctx_.label(m)
                                              : ctx_.label(m) + ", " + ctx_.label(a)) +
                         ") != 0";
              break;
            }
          }
      } else {
        w.detail = ctx_.label(m) + " is orthogonal to X but not in X";
      }
      r.witness = std::move(w);
    }
    v.clauses.push_back(std::move(r));
  }
  finish(v);
  if (v.pass) {
    for (int p : ctx_.projectives())
      if (!x.contains(p)) throw ConsistencyError("cluster tilting set misses projective " + ctx_.label(p));
    for (int i : ctx_.injectives())
      if (!x.contains(i)) throw ConsistencyError("cluster tilting set misses injective " + ctx_.label(i));
  }
  return v;
}

bool Checker::cluster_tilting_fast(const Subcat& x, int d) const {
  for (int m = 0; m < static_cast<int>(ctx_.size()); ++m) {
    bool right = true, left = true;
    for (int k = 1; k < d && (right || left); ++k)
      for (int a : x.members()) {
        if (right && ctx_.e_k(k, a, m) != 0) right = false;
        if (left && ctx_.e_k(k, m, a) != 0) left = false;
      }
    if (right != x.contains(m) || left != x.contains(m)) return false;
  }
  return true;
}

bool Checker::diagonal_cotorsion_fast(const Subcat& x, int n) const {
  if (!vanishing(x, x, n, nullptr)) return false;
  return check_cotorsion(x, x, n).pass;
}

std::vector<Subcat> Checker::enumerate(bool (Checker::*accept)(const Subcat&, int) const, int degree,
                                       int only_size) const {
  const std::size_t n = ctx_.size();
  std::vector<int> forced = ctx_.projectives();
  forced.insert(forced.end(), ctx_.injectives().begin(), ctx_.injectives().end());
  Subcat base(n, forced);
  std::vector<int> free;
  for (int i = 0; i < static_cast<int>(n); ++i)
    if (!base.contains(i)) free.push_back(i);

  std::size_t lo = 0, hi = free.size();
  if (only_size >= 0) {
    if (static_cast<std::size_t>(only_size) < base.size() || static_cast<std::size_t>(only_size) > n) return {};
    lo = hi = static_cast<std::size_t>(only_size) - base.size();
  }
  // candidate count, saturating at the budget
  std::uint64_t total = 0;
  for (std::size_t s = lo; s <= hi; ++s) {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < s && c <= options_.max_subsets; ++i) c = c * (free.size() - i) / (i + 1);
    total += c;
    if (total > options_.max_subsets) {
      throw BudgetExceeded("subset enumeration over " + std::to_string(free.size()) +
                           " free objects exceeds the budget of " + std::to_string(options_.max_subsets) +
                           " candidates");
    }
  }

  std::vector<Subcat> out;
  for (std::size_t s = lo; s <= hi; ++s) {
    // combinations of `free` of size s in lexicographic order
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      std::vector<int> members = base.members();
      for (std::size_t i : pick) members.push_back(free[i]);
      Subcat x(n, std::move(members));
      if ((this->*accept)(x, degree)) out.push_back(std::move(x));
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == free.size() - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subcat> Checker::enumerate_cluster_tilting(int d, int only_size) const {
  if (d < 2) throw Error("cluster tilting degree must be at least 2");
  require_degree(d - 1);
  return enumerate(&Checker::cluster_tilting_fast, d, only_size);
}

std::vector<Subcat> Checker::enumerate_cotorsion_diagonal(int n, int only_size) const {
  if (n < 1) throw Error("n must be at least 1");
  require_degree(n);
  return enumerate(&Checker::diagonal_cotorsion_fast, n, only_size);
}

TheoremReport Checker::verify_theorem(int n) const {
  TheoremReport r;
  r.n = n;
  r.cluster_tilting = enumerate_cluster_tilting(n + 1);
  r.cotorsion = enumerate_cotorsion_diagonal(n);
  r.equal = r.cluster_tilting == r.cotorsion;
  std::vector<Subcat> all = r.cluster_tilting;
  all.insert(all.end(), r.cotorsion.begin(), r.cotorsion.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (const auto& x : all) {
    r.verdicts.push_back(check_cluster_tilting(x, n + 1));
    r.verdicts.push_back(check_cotorsion(x, x, n));
  }
  return r;
}

ContainmentReport Checker::verify_lemma_32(const Subcat& x, int n) const {
  if (n < 1) throw Error("n must be at least 1");
  ContainmentReport r;
  r.left = orthogonal(x, Side::Left, 1, n);
  r.wedge = wedge(x, n - 1);
  r.right = orthogonal(r.wedge, Side::Left, 1, 1);
  for (int m : r.left.members())
    if (!r.right.contains(m)) {
      r.holds = false;
      r.violator = m;
      break;
    }
  return r;
}

EquivalenceReport Checker::verify_lemma_33(const Subcat& x, const Subcat& y, int n) const {
  EquivalenceReport r;
  r.verdict = check_left_cotorsion(x, y, n).pass;
  r.intersection = orthogonal(y, Side::Left, 1, n);
  r.formulation = x == r.intersection && approximation_clause(x, y, n, Side::Left).pass;
  return r;
}

}  // namespace extri
