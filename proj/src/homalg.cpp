#include "extri/homalg.hpp"

#include <map>
#include <mutex>
#include <string>

#include "extri/decompose.hpp"

namespace extri {

namespace {

std::size_t uz(int x) { return static_cast<std::size_t>(x); }

/// Standard basis vectors completing the columns of `sub` to a basis of F^n.
std::vector<std::size_t> complement_positions(const Matrix& sub, std::size_t n) {
  SpanBuilder span(sub.p(), n);
  for (std::size_t c = 0; c < sub.cols(); ++c) span.add(sub.column(c));
  std::vector<std::size_t> chosen;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Scalar> e(n, 0);
    e[k] = 1;
    if (span.add(e)) chosen.push_back(k);
  }
  return chosen;
}

}  // namespace

ProjectiveCover projective_cover(const Representation& m) {
  const auto& alg = m.algebra;
  Kernel rad = radical(m);
  std::vector<Representation> parts;
  std::vector<ModuleMap> components;
  std::vector<int> vertices;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    for (std::size_t k : complement_positions(rad.inclusion.blocks[v], uz(m.dims[v]))) {
      Representation pv = projective_module(alg, static_cast<int>(v));
      ModuleMap f = zero_map(pv, m);
      std::vector<std::size_t> filled(m.dims.size(), 0);
      for (int q : alg->basis_from(static_cast<int>(v))) {
        const Path& path = alg->basis_path(q);
        std::size_t t = uz(path.target);
        Matrix act = m.path_action(path);
        for (std::size_t r = 0; r < act.rows(); ++r) f.blocks[t](r, filled[t]) = act(r, k);
        ++filled[t];
      }
      parts.push_back(std::move(pv));
      components.push_back(std::move(f));
      vertices.push_back(static_cast<int>(v));
    }
  }
  DirectSum sum = direct_sum(alg, parts);
  ProjectiveCover cover;
  cover.map = map_from_sum(sum, components, m);
  cover.module = std::move(sum.sum);
  cover.vertices = std::move(vertices);
  return cover;
}

InjectiveHull injective_hull(const Representation& m) {
  const auto& alg = m.algebra;
  Kernel soc = socle(m);
  std::vector<Representation> parts;
  std::vector<ModuleMap> components;
  std::vector<int> vertices;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    const Matrix& s = soc.inclusion.blocks[v];
    if (s.cols() == 0) continue;
    // functionals phi with phi * s = identity on the socle
    auto phi_t = solve(s.transpose(), Matrix::identity(m.p(), s.cols()));
    Matrix phi = phi_t->transpose();
    for (std::size_t k = 0; k < phi.rows(); ++k) {
      Representation iv = injective_module(alg, static_cast<int>(v));
      ModuleMap f = zero_map(m, iv);
      std::vector<std::size_t> filled(m.dims.size(), 0);
      for (int q : alg->basis_to(static_cast<int>(v))) {
        const Path& path = alg->basis_path(q);
        std::size_t src = uz(path.source);
        Matrix act = m.path_action(path);  // dims[v] x dims[src]
        for (std::size_t c = 0; c < act.cols(); ++c) {
          Scalar acc = 0;
          PrimeField fld(m.p());
          for (std::size_t r = 0; r < act.rows(); ++r) acc = fld.add(acc, fld.mul(phi(k, r), act(r, c)));
          f.blocks[src](filled[src], c) = acc;
        }
        ++filled[src];
      }
      parts.push_back(std::move(iv));
      components.push_back(std::move(f));
      vertices.push_back(static_cast<int>(v));
    }
  }
  DirectSum sum = direct_sum(alg, parts);
  InjectiveHull hull;
  hull.map = map_into_sum(sum, components, m);
  hull.module = std::move(sum.sum);
  hull.vertices = std::move(vertices);
  return hull;
}

Representation syzygy(const Representation& m) {
  ProjectiveCover c = projective_cover(m);
  return kernel(c.module, m, c.map).module;
}

Representation cosyzygy(const Representation& m) {
  InjectiveHull h = injective_hull(m);
  return cokernel(m, h.module, h.map).module;
}

bool is_projective(const Representation& m) {
  return projective_cover(m).module.total_dim() == m.total_dim();
}

bool is_injective(const Representation& m) { return injective_hull(m).module.total_dim() == m.total_dim(); }

ModuleMap Resolution::differential(std::size_t k) const {
  return compose(steps[k - 1].inclusion, steps[k].cover);
}

namespace {

class ResolutionCache {
 public:
  std::vector<ResolutionStep> get(const Representation& m, std::size_t length) {
    std::string key = std::to_string(m.algebra->hash()) + "#" + m.key();
    std::vector<ResolutionStep> steps;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = entries_.find(key);
      if (it != entries_.end()) steps = it->second;
    }
    if (steps.size() >= length) {
      steps.resize(length);
      return steps;
    }
    // extend outside the lock; concurrent extensions are idempotent
    while (steps.size() < length) {
      const Representation& cur = steps.empty() ? m : steps.back().next;
      ProjectiveCover c = projective_cover(cur);
      Kernel k = kernel(c.module, cur, c.map);
      steps.push_back(ResolutionStep{std::move(c.module), std::move(c.map), std::move(k.module), std::move(k.inclusion)});
    }
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto& slot = entries_[key];
      if (slot.size() < steps.size()) slot = steps;
    }
    return steps;
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    entries_.clear();
  }

 private:
  std::mutex mu_;
  std::map<std::string, std::vector<ResolutionStep>> entries_;
};

ResolutionCache& cache() {
  static ResolutionCache c;
  return c;
}

}  // namespace

Resolution minimal_resolution(const Representation& m, std::size_t length) {
  return Resolution{m, cache().get(m, length)};
}

void clear_resolution_cache() { cache().clear(); }

std::size_t ext_dim(int k, const Representation& m, const Representation& n) {
  if (k < 0) return 0;
  if (k == 0) return hom_dim(m, n);
  // Ext^k = coker(Hom(P_{k-1}, N) -> Hom(Omega^k M, N))
  Resolution res = minimal_resolution(m, static_cast<std::size_t>(k));
  const ResolutionStep& step = res.steps[static_cast<std::size_t>(k - 1)];
  std::size_t h = hom_dim(step.next, n);
  if (h == 0) return 0;
  SpanBuilder span(m.p(), map_length(step.next, n));
  for (const auto& f : hom_basis(step.projective, n)) span.add(flatten(compose(f, step.inclusion)));
  return h - span.dim();
}

Approximation right_approximation(const std::vector<Representation>& objects, const Representation& c,
                                  bool augment) {
  std::vector<Representation> parts;
  std::vector<ModuleMap> components;
  std::vector<int> from;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (auto& f : hom_basis(objects[i], c)) {
      parts.push_back(objects[i]);
      components.push_back(std::move(f));
      from.push_back(static_cast<int>(i));
    }
  }
  if (augment) {
    ProjectiveCover cover = projective_cover(c);
    if (!cover.module.is_zero()) {
      parts.push_back(cover.module);
      components.push_back(cover.map);
      from.push_back(-1);
    }
  }
  DirectSum sum = direct_sum(c.algebra, parts);
  Approximation a;
  a.map = map_from_sum(sum, components, c);
  a.module = std::move(sum.sum);
  a.summands = std::move(parts);
  a.from_objects = std::move(from);
  return a;
}

Approximation left_approximation(const std::vector<Representation>& objects, const Representation& c,
                                 bool augment) {
  std::vector<Representation> parts;
  std::vector<ModuleMap> components;
  std::vector<int> from;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (auto& f : hom_basis(c, objects[i])) {
      parts.push_back(objects[i]);
      components.push_back(std::move(f));
      from.push_back(static_cast<int>(i));
    }
  }
  if (augment) {
    InjectiveHull hull = injective_hull(c);
    if (!hull.module.is_zero()) {
      parts.push_back(hull.module);
      components.push_back(hull.map);
      from.push_back(-1);
    }
  }
  DirectSum sum = direct_sum(c.algebra, parts);
  Approximation a;
  a.map = map_into_sum(sum, components, c);
  a.module = std::move(sum.sum);
  a.summands = std::move(parts);
  a.from_objects = std::move(from);
  return a;
}

namespace {

/// Drops redundant components: for right approximations f_j is redundant when
/// it lies in span{f_k . h}, for left ones when it lies in span{h . f_k}.
Approximation prune(const std::vector<Representation>& objects, const Representation& c,
                    std::vector<ModuleMap> components, std::vector<int> from, bool right) {
  const std::size_t r = components.size();
  std::map<std::pair<int, int>, std::vector<ModuleMap>> homs;
  auto hom = [&](int a, int b) -> const std::vector<ModuleMap>& {
    auto it = homs.find({a, b});
    if (it == homs.end()) it = homs.emplace(std::make_pair(a, b), hom_basis(objects[uz(a)], objects[uz(b)])).first;
    return it->second;
  };
  std::vector<bool> keep(r, true);
  for (std::size_t j = 0; j < r; ++j) {
    const Representation& xj = objects[uz(from[j])];
    SpanBuilder span(c.p(), right ? map_length(xj, c) : map_length(c, xj));
    for (std::size_t k = 0; k < r; ++k) {
      if (k == j || !keep[k]) continue;
      if (right) {
        for (const auto& h : hom(from[j], from[k])) span.add(flatten(compose(components[k], h)));
      } else {
        for (const auto& h : hom(from[k], from[j])) span.add(flatten(compose(h, components[k])));
      }
    }
    if (span.contains(flatten(components[j]))) keep[j] = false;
  }
  std::vector<Representation> parts;
  std::vector<ModuleMap> kept;
  std::vector<int> kept_from;
  for (std::size_t j = 0; j < r; ++j) {
    if (!keep[j]) continue;
    parts.push_back(objects[uz(from[j])]);
    kept.push_back(std::move(components[j]));
    kept_from.push_back(from[j]);
  }
  DirectSum sum = direct_sum(c.algebra, parts);
  Approximation a;
  a.map = right ? map_from_sum(sum, kept, c) : map_into_sum(sum, kept, c);
  a.module = std::move(sum.sum);
  a.summands = std::move(parts);
  a.from_objects = std::move(kept_from);
  return a;
}

}  // namespace

Approximation minimal_right_approximation(const std::vector<Representation>& objects, const Representation& c) {
  std::vector<ModuleMap> components;
  std::vector<int> from;
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (auto& f : hom_basis(objects[i], c)) {
      components.push_back(std::move(f));
      from.push_back(static_cast<int>(i));
    }
  return prune(objects, c, std::move(components), std::move(from), true);
}

Approximation minimal_left_approximation(const std::vector<Representation>& objects, const Representation& c) {
  std::vector<ModuleMap> components;
  std::vector<int> from;
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (auto& f : hom_basis(c, objects[i])) {
      components.push_back(std::move(f));
      from.push_back(static_cast<int>(i));
    }
  return prune(objects, c, std::move(components), std::move(from), false);
}

Representation strip_projective_summands(const Representation& m, std::uint64_t seed) {
  std::vector<Representation> kept;
  for (const auto& s : decompose(m, seed)) {
    if (is_projective(s.module)) continue;
    for (int i = 0; i < s.multiplicity; ++i) kept.push_back(s.module);
  }
  return direct_sum(m.algebra, kept).sum;
}

}  // namespace extri
