#include "extri/context.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "extri/decompose.hpp"
#include "extri/errors.hpp"
#include "extri/stable.hpp"

namespace extri {

namespace {

std::size_t uz(int x) { return static_cast<std::size_t>(x); }

std::uint64_t checked_power(std::uint64_t p, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    r *= p;
    if (r > cap) return cap + 1;
  }
  return r;
}

std::string dotted(const std::vector<int>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(d[i]);
  }
  return s;
}

/// Top vertex and length if m is uniserial (every radical layer simple).
std::optional<std::pair<int, int>> uniserial_shape(const Representation& m) {
  Representation cur = m;
  int top = -1, len = 0;
  while (!cur.is_zero()) {
    auto t = top_dims(cur);
    int sum = 0, v = -1;
    for (std::size_t i = 0; i < t.size(); ++i) {
      sum += t[i];
      if (t[i]) v = static_cast<int>(i);
    }
    if (sum != 1) return std::nullopt;
    if (len == 0) top = v;
    ++len;
    cur = radical(cur).module;
  }
  if (len == 0) return std::nullopt;
  return std::make_pair(top, len);
}

}  // namespace

ExtSpace extension_space(const Representation& c, const Representation& a) {
  Resolution r = minimal_resolution(c, 1);
  const ResolutionStep& step = r.steps[0];
  ExtSpace e{c, a, step.projective, step.cover, step.next, step.inclusion, {}};
  SpanBuilder span(c.p(), map_length(step.next, a));
  for (const auto& h : hom_basis(step.projective, a)) span.add(flatten(compose(h, step.inclusion)));
  for (auto& phi : hom_basis(step.next, a))
    if (span.add(flatten(phi))) e.basis.push_back(std::move(phi));
  return e;
}

ModuleConflation realize(const ExtSpace& e, const std::vector<Scalar>& coefficients) {
  const auto& alg = e.c.algebra;
  PrimeField f(e.c.p());
  ModuleMap phi = linear_combination(e.basis, coefficients, e.syzygy, e.a);
  DirectSum sum = direct_sum(alg, {e.a, e.projective});
  ModuleMap into = map_into_sum(sum, {phi, scale(e.inclusion, f.neg(1))}, e.syzygy);
  Cokernel b = cokernel(e.syzygy, sum.sum, into);
  ModuleConflation out;
  out.a = e.a;
  out.c = e.c;
  out.x = compose(b.projection, sum.inclusions[0]);
  ModuleMap down = map_from_sum(sum, {zero_map(e.a, e.c), e.cover}, e.c);
  out.y = factor_through_cokernel(b, e.c, down);
  out.b = std::move(b.module);
  return out;
}

std::vector<std::vector<Scalar>> projective_classes(std::uint32_t p, std::size_t dim) {
  std::vector<std::vector<Scalar>> out;
  for (std::size_t lead = 0; lead < dim; ++lead) {
    std::vector<Scalar> v(dim, 0);
    v[lead] = 1;
    while (true) {
      out.push_back(v);
      // count through the entries after the leading one
      std::size_t k = lead + 1;
      while (k < dim && ++v[k] == p) v[k++] = 0;
      if (k == dim) break;
    }
  }
  return out;
}

// ---- ambient ----------------------------------------------------------------

namespace {

struct PairData {
  ExtSpace space;
  std::vector<std::vector<Scalar>> classes;
  std::vector<std::vector<int>> middles;  // discovery indices with repetition
};

struct Enumeration {
  std::vector<Representation> modules;
  std::vector<std::string> fps;
  std::map<std::string, std::vector<int>> by_fp;
  std::map<std::pair<int, int>, PairData> pairs;
};

Enumeration enumerate_indecomposables(const AlgebraPtr& alg, const AmbientOptions& options) {
  Enumeration en;
  auto add_indec = [&](const Representation& m) -> int {
    std::string fp = fingerprint(m);
    auto& bucket = en.by_fp[fp];
    for (int idx : bucket)
      if (indecomposables_isomorphic(en.modules[uz(idx)], m)) return idx;
    if (en.modules.size() >= options.max_objects) {
      throw BudgetExceeded("more than " + std::to_string(options.max_objects) +
                           " indecomposables found; the algebra may have infinite representation type");
    }
    int idx = static_cast<int>(en.modules.size());
    en.modules.push_back(m);
    en.fps.push_back(fp);
    bucket.push_back(idx);
    return idx;
  };
  auto add_all = [&](const Representation& m) {
    std::vector<int> out;
    for (const auto& s : decompose(m, options.seed)) {
      int idx = add_indec(s.module);
      for (int k = 0; k < s.multiplicity; ++k) out.push_back(idx);
    }
    return out;
  };
  auto process = [&](int c, int a) {
    PairData d{extension_space(en.modules[uz(c)], en.modules[uz(a)]), {}, {}};
    std::size_t e = d.space.basis.size();
    if (checked_power(alg->p(), e, options.max_classes) > options.max_classes) {
      throw BudgetExceeded("E between two objects has " + std::to_string(alg->p()) + "^" + std::to_string(e) +
                           " classes, above the exhaustion bound " + std::to_string(options.max_classes) +
                           "; use a smaller field");
    }
    d.classes = projective_classes(alg->p(), e);
    for (const auto& cls : d.classes) d.middles.push_back(add_all(realize(d.space, cls).b));
    en.pairs.emplace(std::make_pair(c, a), std::move(d));
  };

  int n = static_cast<int>(alg->num_vertices());
  for (int v = 0; v < n; ++v) {
    add_indec(simple_module(alg, v));
    add_indec(projective_module(alg, v));
    add_indec(injective_module(alg, v));
  }
  for (std::size_t i = 0; i < en.modules.size(); ++i) {
    Representation m = en.modules[i];
    add_all(syzygy(m));
    add_all(cosyzygy(m));
    for (std::size_t j = 0; j <= i; ++j) {
      process(static_cast<int>(i), static_cast<int>(j));
      if (i != j) process(static_cast<int>(j), static_cast<int>(i));
    }
  }
  return en;
}

}  // namespace

std::shared_ptr<const Ambient> Ambient::exact(AlgebraPtr alg, const AmbientOptions& options) {
  std::shared_ptr<Ambient> amb(new Ambient());
  amb->kind_ = AmbientKind::Exact;
  amb->alg_ = std::move(alg);
  amb->options_ = options;
  Enumeration en = enumerate_indecomposables(amb->alg_, options);

  std::vector<int> keep;
  for (std::size_t i = 0; i < en.modules.size(); ++i) keep.push_back(static_cast<int>(i));
  auto finish = [&](Ambient& a, const std::vector<int>& kept) {
    std::vector<int> order = kept;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      const auto& mx = en.modules[uz(x)];
      const auto& my = en.modules[uz(y)];
      if (mx.total_dim() != my.total_dim()) return mx.total_dim() < my.total_dim();
      if (mx.dims != my.dims) return mx.dims > my.dims;
      return en.fps[uz(x)] < en.fps[uz(y)];
    });
    std::vector<int> final_index(en.modules.size(), -1);
    for (std::size_t k = 0; k < order.size(); ++k) final_index[uz(order[k])] = static_cast<int>(k);
    std::size_t n = order.size();
    for (int d : order) {
      AmbientObject o;
      o.module = en.modules[uz(d)];
      o.fingerprint = en.fps[uz(d)];
      o.projective_module = is_projective(o.module);
      o.injective_module = is_injective(o.module);
      a.objects_.push_back(std::move(o));
    }
    a.ext_.resize(n * n);
    a.classes_.resize(n * n);
    a.middles_.resize(n * n);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t t = 0; t < n; ++t) {
        PairData& d = en.pairs.at({order[c], order[t]});
        std::size_t k = c * n + t;
        a.ext_[k] = d.space;
        a.classes_[k] = d.classes;
        for (const auto& mid : d.middles) {
          Multiset ms(n, 0);
          for (int disc : mid)
            if (final_index[uz(disc)] >= 0) ++ms[uz(final_index[uz(disc)])];
          a.middles_[k].push_back(std::move(ms));
        }
      }
    }
    a.assign_labels();
  };
  finish(*amb, keep);
  return amb;
}

std::shared_ptr<const Ambient> Ambient::stable(AlgebraPtr alg, const AmbientOptions& options) {
  StableCategory sc(alg);  // throws if not self-injective
  std::shared_ptr<Ambient> amb(new Ambient());
  amb->kind_ = AmbientKind::Stable;
  amb->alg_ = std::move(alg);
  amb->options_ = options;
  Enumeration en = enumerate_indecomposables(amb->alg_, options);

  std::vector<int> order;
  for (std::size_t i = 0; i < en.modules.size(); ++i)
    if (!is_projective(en.modules[i])) order.push_back(static_cast<int>(i));
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const auto& mx = en.modules[uz(x)];
    const auto& my = en.modules[uz(y)];
    if (mx.total_dim() != my.total_dim()) return mx.total_dim() < my.total_dim();
    if (mx.dims != my.dims) return mx.dims > my.dims;
    return en.fps[uz(x)] < en.fps[uz(y)];
  });
  std::vector<int> final_index(en.modules.size(), -1);
  for (std::size_t k = 0; k < order.size(); ++k) final_index[uz(order[k])] = static_cast<int>(k);
  std::size_t n = order.size();
  std::vector<Representation> shifts;
  for (int d : order) {
    AmbientObject o;
    o.module = en.modules[uz(d)];
    o.fingerprint = en.fps[uz(d)];
    shifts.push_back(sc.suspension(o.module));
    amb->objects_.push_back(std::move(o));
  }
  amb->ext_.resize(n * n);
  amb->classes_.resize(n * n);
  amb->middles_.resize(n * n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t t = 0; t < n; ++t) {
      PairData& d = en.pairs.at({order[c], order[t]});
      std::size_t k = c * n + t;
      // E(C, A) of the triangulated model is stable Hom(C, Sigma A)
      std::size_t stable_dim = sc.stable_hom_dim(amb->objects_[c].module, shifts[t]);
      if (stable_dim != d.space.basis.size()) {
        throw ConsistencyError("stable Hom(C, Sigma A) and Ext^1(C, A) disagree");
      }
      amb->ext_[k] = d.space;
      amb->classes_[k] = d.classes;
      for (const auto& mid : d.middles) {
        Multiset ms(n, 0);
        for (int disc : mid)
          if (final_index[uz(disc)] >= 0) ++ms[uz(final_index[uz(disc)])];
        amb->middles_[k].push_back(std::move(ms));
      }
    }
  }
  amb->assign_labels();
  return amb;
}

void Ambient::assign_labels() {
  const auto& ids = alg_->quiver().vertex_ids();
  int nv = static_cast<int>(alg_->num_vertices());
  std::vector<Representation> proj, inj, simp;
  for (int v = 0; v < nv; ++v) {
    proj.push_back(projective_module(alg_, v));
    inj.push_back(injective_module(alg_, v));
    simp.push_back(simple_module(alg_, v));
  }
  std::vector<std::vector<std::string>> names(objects_.size());
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    const Representation& m = objects_[i].module;
    auto& nm = names[i];
    for (int v = 0; v < nv; ++v)
      if (simp[uz(v)].dims == m.dims) nm.push_back("S" + std::to_string(ids[uz(v)]));
    for (int v = 0; v < nv; ++v)
      if (proj[uz(v)].dims == m.dims && indecomposables_isomorphic(proj[uz(v)], m))
        nm.push_back("P" + std::to_string(ids[uz(v)]));
    for (int v = 0; v < nv; ++v)
      if (inj[uz(v)].dims == m.dims && indecomposables_isomorphic(inj[uz(v)], m))
        nm.push_back("I" + std::to_string(ids[uz(v)]));
    if (auto shape = uniserial_shape(m); shape && shape->second > 1) {
      nm.push_back("U" + std::to_string(ids[uz(shape->first)]) + "." + std::to_string(shape->second));
    }
    nm.push_back("M" + dotted(m.dims));
  }
  // primary labels, with suffixes for repeated ones
  std::map<std::string, int> count, seen;
  for (const auto& nm : names) ++count[nm.front()];
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    std::string base = names[i].front();
    objects_[i].label = count[base] > 1 ? base + "_" + std::to_string(++seen[base]) : base;
  }
  // aliases must be unambiguous
  std::map<std::string, int> uses;
  for (const auto& nm : names)
    for (std::size_t k = 1; k < nm.size(); ++k) ++uses[nm[k]];
  for (const auto& o : objects_) ++uses[o.label];
  for (std::size_t i = 0; i < objects_.size(); ++i)
    for (std::size_t k = 1; k < names[i].size(); ++k)
      if (uses[names[i][k]] == 1) objects_[i].aliases.push_back(names[i][k]);
}

int Ambient::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i].label == label) return static_cast<int>(i);
    for (const auto& a : objects_[i].aliases)
      if (a == label) return static_cast<int>(i);
  }
  return -1;
}

int Ambient::find(const Representation& m) const {
  std::string fp = fingerprint(m);
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i].fingerprint == fp && indecomposables_isomorphic(objects_[i].module, m))
      return static_cast<int>(i);
  return -1;
}

Multiset Ambient::identify(const Representation& m) const {
  Multiset ms(objects_.size(), 0);
  for (const auto& s : decompose(m, options_.seed)) {
    int idx = find(s.module);
    if (idx < 0) {
      if (kind_ == AmbientKind::Stable && is_projective(s.module)) continue;
      throw ConsistencyError("a summand of dimension vector " + dotted(s.module.dims) +
                             " is not among the enumerated objects");
    }
    ms[uz(idx)] += s.multiplicity;
  }
  return ms;
}

Representation Ambient::module_of(const Multiset& ms) const {
  std::vector<Representation> parts;
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (int k = 0; k < ms[i]; ++k) parts.push_back(objects_[i].module);
  return direct_sum(alg_, parts).sum;
}

std::optional<Representation> Ambient::cocone(const Representation& b, const Representation& c,
                                              const ModuleMap& f) const {
  if (kind_ == AmbientKind::Exact) {
    if (!is_surjective_map(c, f)) return std::nullopt;
    return kernel(b, c, f).module;
  }
  ProjectiveCover cover = projective_cover(c);
  DirectSum sum = direct_sum(alg_, {b, cover.module});
  ModuleMap g = map_from_sum(sum, {f, cover.map}, c);
  return kernel(sum.sum, c, g).module;
}

std::optional<Representation> Ambient::cone(const Representation& a, const Representation& b,
                                            const ModuleMap& f) const {
  if (kind_ == AmbientKind::Exact) {
    if (!is_injective_map(f)) return std::nullopt;
    return cokernel(a, b, f).module;
  }
  InjectiveHull hull = injective_hull(a);
  DirectSum sum = direct_sum(alg_, {hull.module, b});
  ModuleMap g = map_into_sum(sum, {hull.map, f}, a);
  return cokernel(a, sum.sum, g).module;
}

ExtensionClosureResult check_extension_closed(const Ambient& ambient, const std::vector<int>& members) {
  std::vector<bool> in(ambient.size(), false);
  for (int m : members) in[uz(m)] = true;
  for (int c : members) {
    for (int a : members) {
      const auto& mids = ambient.middles(c, a);
      for (std::size_t k = 0; k < mids.size(); ++k) {
        for (std::size_t o = 0; o < mids[k].size(); ++o) {
          if (mids[k][o] > 0 && !in[o]) {
            return ExtensionClosureResult{false, c, a, ambient.classes(c, a)[k], mids[k], static_cast<int>(o)};
          }
        }
      }
    }
  }
  return {};
}

// ---- context ----------------------------------------------------------------

Context::Context(AmbientPtr ambient, std::vector<int> members, bool is_sub, const ContextOptions& options)
    : ambient_(std::move(ambient)), members_(std::move(members)), is_sub_(is_sub), options_(options) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  local_.assign(ambient_->size(), -1);
  for (std::size_t i = 0; i < members_.size(); ++i) local_[uz(members_[i])] = static_cast<int>(i);
}

Context Context::whole(AmbientPtr ambient, const ContextOptions& options) {
  std::vector<int> all(ambient->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  Context ctx(std::move(ambient), std::move(all), false, options);
  ctx.build();
  return ctx;
}

Context Context::sub(AmbientPtr ambient, std::vector<int> ambient_members, const ContextOptions& options) {
  for (int m : ambient_members)
    if (m < 0 || uz(m) >= ambient->size()) throw UnknownSymbolError("object index out of range");
  auto closure = check_extension_closed(*ambient, ambient_members);
  if (!closure.closed) {
    std::string coeffs;
    for (Scalar s : closure.delta) coeffs += (coeffs.empty() ? "" : ",") + std::to_string(s);
    throw NotExtensionClosedError("not extension-closed: a class [" + coeffs + "] in E(" +
                                  ambient->object(closure.c).label + ", " + ambient->object(closure.a).label +
                                  ") has middle-term summand " + ambient->object(closure.outside).label +
                                  " outside the subset");
  }
  Context ctx(std::move(ambient), std::move(ambient_members), true, options);
  ctx.build();
  return ctx;
}

int Context::find_label(std::string_view label) const {
  int a = ambient_->find_label(label);
  return a < 0 ? -1 : local_index(a);
}

std::uint64_t Context::id_hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::string_view s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  mix(std::to_string(ambient_->algebra()->hash()));
  mix(kind_name());
  mix(ambient_->name());
  for (int m : members_) mix(ambient_->object(m).label);
  return h;
}

std::optional<Multiset> Context::to_local(const Multiset& ambient_ms) const {
  Multiset out(members_.size(), 0);
  for (std::size_t i = 0; i < ambient_ms.size(); ++i) {
    if (ambient_ms[i] == 0) continue;
    int l = local_[i];
    if (l < 0) return std::nullopt;
    out[uz(l)] += ambient_ms[i];
  }
  return out;
}

Representation Context::module_of(const Multiset& local_ms) const {
  Multiset amb(ambient_->size(), 0);
  for (std::size_t i = 0; i < local_ms.size(); ++i) amb[uz(members_[i])] += local_ms[i];
  return ambient_->module_of(amb);
}

std::optional<Multiset> Context::third_term(const Representation& a, const Representation& b, const ModuleMap& f,
                                            bool deflation) const {
  auto third = deflation ? ambient_->cocone(a, b, f) : ambient_->cone(a, b, f);
  if (!third) return std::nullopt;
  return to_local(ambient_->identify(*third));
}

std::optional<Context::Approx> Context::right_approximation(const std::vector<int>& xs, int c) const {
  std::vector<Representation> mods;
  for (int x : xs) mods.push_back(module(x));
  Approximation ap = minimal_right_approximation(mods, module(c));
  Approx out;
  out.source.assign(size(), 0);
  for (int from : ap.from_objects) ++out.source[uz(xs[uz(from)])];
  auto third = third_term(ap.module, module(c), ap.map, true);
  if (!third) return std::nullopt;
  out.third = std::move(*third);
  return out;
}

std::optional<Context::Approx> Context::left_approximation(const std::vector<int>& xs, int c) const {
  std::vector<Representation> mods;
  for (int x : xs) mods.push_back(module(x));
  Approximation ap = minimal_left_approximation(mods, module(c));
  Approx out;
  out.source.assign(size(), 0);
  for (int from : ap.from_objects) ++out.source[uz(xs[uz(from)])];
  auto third = third_term(module(c), ap.module, ap.map, false);
  if (!third) return std::nullopt;
  out.third = std::move(*third);
  return out;
}

namespace {

/// Visits every multiplicity vector in [0, mmax]^n.
template <class F>
void for_each_multiplicity(std::size_t n, int mmax, F&& visit) {
  std::vector<int> m(n, 0);
  while (true) {
    visit(m);
    std::size_t k = 0;
    while (k < n && m[k] == mmax) m[k++] = 0;
    if (k == n) return;
    ++m[k];
  }
}

}  // namespace

std::vector<Multiset> Context::all_deflation_cocones(const std::vector<int>& xs, int c, int mmax,
                                                     std::size_t max_maps) const {
  const Representation& target = module(c);
  std::vector<std::vector<ModuleMap>> homs;
  for (int x : xs) homs.push_back(hom_basis(module(x), target));
  std::set<Multiset> found;
  std::size_t visited = 0;
  for_each_multiplicity(xs.size(), mmax, [&](const std::vector<int>& mult) {
    std::vector<Representation> parts;
    std::vector<const std::vector<ModuleMap>*> part_homs;
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (int k = 0; k < mult[i]; ++k) {
        parts.push_back(module(xs[i]));
        part_homs.push_back(&homs[i]);
      }
    std::size_t dim = 0;
    for (const auto* h : part_homs) dim += h->size();
    std::uint64_t count = checked_power(ambient_->algebra()->p(), dim, max_maps);
    visited += count;
    if (count > max_maps || visited > max_maps) {
      throw BudgetExceeded("exhaustive search over maps into " + label(c) + " exceeds " +
                           std::to_string(max_maps) + " maps; lower --mmax");
    }
    DirectSum sum = direct_sum(ambient_->algebra(), parts);
    std::vector<Scalar> coeff(dim, 0);
    const std::uint32_t p = ambient_->algebra()->p();
    while (true) {
      std::vector<ModuleMap> comps;
      std::size_t pos = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        std::vector<Scalar> local(coeff.begin() + static_cast<std::ptrdiff_t>(pos),
                                  coeff.begin() + static_cast<std::ptrdiff_t>(pos + part_homs[i]->size()));
        comps.push_back(linear_combination(*part_homs[i], local, parts[i], target));
        pos += part_homs[i]->size();
      }
      ModuleMap f = map_from_sum(sum, comps, target);
      if (auto third = third_term(sum.sum, target, f, true)) found.insert(*third);
      std::size_t k = 0;
      while (k < dim && ++coeff[k] == p) coeff[k++] = 0;
      if (k == dim) break;
    }
  });
  return {found.begin(), found.end()};
}

std::vector<Multiset> Context::all_inflation_cones(const std::vector<int>& xs, int c, int mmax,
                                                   std::size_t max_maps) const {
  const Representation& source = module(c);
  std::vector<std::vector<ModuleMap>> homs;
  for (int x : xs) homs.push_back(hom_basis(source, module(x)));
  std::set<Multiset> found;
  std::size_t visited = 0;
  for_each_multiplicity(xs.size(), mmax, [&](const std::vector<int>& mult) {
    std::vector<Representation> parts;
    std::vector<const std::vector<ModuleMap>*> part_homs;
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (int k = 0; k < mult[i]; ++k) {
        parts.push_back(module(xs[i]));
        part_homs.push_back(&homs[i]);
      }
    std::size_t dim = 0;
    for (const auto* h : part_homs) dim += h->size();
    std::uint64_t count = checked_power(ambient_->algebra()->p(), dim, max_maps);
    visited += count;
    if (count > max_maps || visited > max_maps) {
      throw BudgetExceeded("exhaustive search over maps out of " + label(c) + " exceeds " +
                           std::to_string(max_maps) + " maps; lower --mmax");
    }
    DirectSum sum = direct_sum(ambient_->algebra(), parts);
    std::vector<Scalar> coeff(dim, 0);
    const std::uint32_t p = ambient_->algebra()->p();
    while (true) {
      std::vector<ModuleMap> comps;
      std::size_t pos = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        std::vector<Scalar> local(coeff.begin() + static_cast<std::ptrdiff_t>(pos),
                                  coeff.begin() + static_cast<std::ptrdiff_t>(pos + part_homs[i]->size()));
        comps.push_back(linear_combination(*part_homs[i], local, source, parts[i]));
        pos += part_homs[i]->size();
      }
      ModuleMap f = map_into_sum(sum, comps, source);
      if (auto third = third_term(source, sum.sum, f, false)) found.insert(*third);
      std::size_t k = 0;
      while (k < dim && ++coeff[k] == p) coeff[k++] = 0;
      if (k == dim) break;
    }
  });
  return {found.begin(), found.end()};
}

void Context::build() {
  const std::size_t n = size();
  const int ni = static_cast<int>(n);
  for (int i = 0; i < ni; ++i) {
    bool proj = true, inj = true;
    for (int j = 0; j < ni; ++j) {
      if (e_dim(i, j) != 0) proj = false;
      if (e_dim(j, i) != 0) inj = false;
    }
    if (proj) projectives_.push_back(i);
    if (inj) injectives_.push_back(i);
  }
  proj_witness_.resize(n);
  inj_witness_.resize(n);
  syz_.assign(n, Multiset(n, 0));
  cosyz_.assign(n, Multiset(n, 0));
  for (int i = 0; i < ni; ++i) {
    if (missing_projective_ < 0) {
      if (auto ap = right_approximation(projectives_, i)) {
        proj_witness_[uz(i)] = DeflationWitness{ap->source, ap->third};
        Multiset s = ap->third;
        for (int pidx : projectives_) s[uz(pidx)] = 0;
        syz_[uz(i)] = std::move(s);
      } else {
        missing_projective_ = i;
      }
    }
    if (missing_injective_ < 0) {
      if (auto ap = left_approximation(injectives_, i)) {
        inj_witness_[uz(i)] = DeflationWitness{ap->source, ap->third};
        Multiset s = ap->third;
        for (int iidx : injectives_) s[uz(iidx)] = 0;
        cosyz_[uz(i)] = std::move(s);
      } else {
        missing_injective_ = i;
      }
    }
  }

  // E^k tables by both routes
  int kmax = std::max(1, options_.kmax);
  auto route_table = [&](bool omega) {
    std::vector<std::vector<std::size_t>> tables;
    for (int k = 1; k <= kmax; ++k) {
      std::vector<std::size_t> t(n * n, 0);
      for (int a = 0; a < ni; ++a) {
        for (int b = 0; b < ni; ++b) {
          // iterate Omega on the first argument or Sigma on the second
          Multiset cur(n, 0);
          cur[uz(omega ? a : b)] = 1;
          for (int step = 1; step < k; ++step) {
            Multiset next(n, 0);
            for (std::size_t j = 0; j < n; ++j) {
              if (!cur[j]) continue;
              const Multiset& s = omega ? syz_[j] : cosyz_[j];
              for (std::size_t o = 0; o < n; ++o) next[o] += cur[j] * s[o];
            }
            cur = std::move(next);
          }
          std::size_t total = 0;
          for (std::size_t j = 0; j < n; ++j) {
            if (!cur[j]) continue;
            total += static_cast<std::size_t>(cur[j]) *
                     (omega ? e_dim(static_cast<int>(j), b) : e_dim(a, static_cast<int>(j)));
          }
          t[uz(a) * n + uz(b)] = total;
        }
      }
      tables.push_back(std::move(t));
    }
    return tables;
  };
  if (enough_projectives()) ek_omega_ = route_table(true);
  if (enough_injectives()) ek_sigma_ = route_table(false);
  if (!ek_omega_.empty() && !ek_sigma_.empty()) {
    for (int k = 1; k <= kmax; ++k)
      for (int a = 0; a < ni; ++a)
        for (int b = 0; b < ni; ++b)
          if (ek_omega_[uz(k - 1)][uz(a) * n + uz(b)] != ek_sigma_[uz(k - 1)][uz(a) * n + uz(b)]) {
            throw ConsistencyError("E^" + std::to_string(k) + "(" + label(a) + ", " + label(b) +
                                   ") differs between the syzygy route (" +
                                   std::to_string(ek_omega_[uz(k - 1)][uz(a) * n + uz(b)]) +
                                   ") and the cosyzygy route (" +
                                   std::to_string(ek_sigma_[uz(k - 1)][uz(a) * n + uz(b)]) + ")");
          }
  }
}

std::size_t Context::e_k_omega(int k, int a, int b) const {
  if (k < 1 || k > static_cast<int>(ek_omega_.size())) {
    throw Error("E^" + std::to_string(k) + " by the syzygy route is unavailable in this context");
  }
  return ek_omega_[uz(k - 1)][uz(a) * size() + uz(b)];
}

std::size_t Context::e_k_sigma(int k, int a, int b) const {
  if (k < 1 || k > static_cast<int>(ek_sigma_.size())) {
    throw Error("E^" + std::to_string(k) + " by the cosyzygy route is unavailable in this context");
  }
  return ek_sigma_[uz(k - 1)][uz(a) * size() + uz(b)];
}

std::size_t Context::e_k(int k, int a, int b) const {
  if (k == 1) return e_dim(a, b);
  if (k < 1 || k > options_.kmax) {
    throw Error("E^" + std::to_string(k) + " requested beyond the table depth " + std::to_string(options_.kmax));
  }
  if (!ek_omega_.empty()) return e_k_omega(k, a, b);
  if (!ek_sigma_.empty()) return e_k_sigma(k, a, b);
  throw Error("E^k for k >= 2 needs enough projectives or enough injectives");
}

}  // namespace extri
