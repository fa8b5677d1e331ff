#include "extri/stable.hpp"

#include "extri/decompose.hpp"
#include "extri/errors.hpp"

namespace extri {

bool is_self_injective(const AlgebraPtr& alg) {
  int n = static_cast<int>(alg->num_vertices());
  std::vector<Representation> injectives;
  for (int j = 0; j < n; ++j) injectives.push_back(injective_module(alg, j));
  for (int i = 0; i < n; ++i) {
    Representation p = projective_module(alg, i);
    bool found = false;
    for (const auto& inj : injectives) {
      if (inj.dims == p.dims && is_isomorphic(p, inj)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

StableCategory::StableCategory(AlgebraPtr alg) : alg_(std::move(alg)) {
  if (!is_self_injective(alg_)) throw NotSelfInjectiveError();
}

std::vector<ModuleMap> StableCategory::projectively_factoring(const Representation& m,
                                                              const Representation& n) const {
  InjectiveHull hull = injective_hull(m);
  SpanBuilder span(m.p(), map_length(m, n));
  std::vector<ModuleMap> out;
  for (const auto& g : hom_basis(hull.module, n)) {
    ModuleMap h = compose(g, hull.map);
    if (span.add(flatten(h))) out.push_back(std::move(h));
  }
  return out;
}

std::size_t StableCategory::stable_hom_dim(const Representation& m, const Representation& n) const {
  return hom_dim(m, n) - projectively_factoring(m, n).size();
}

std::vector<ModuleMap> StableCategory::stable_hom_basis(const Representation& m, const Representation& n) const {
  SpanBuilder span(m.p(), map_length(m, n));
  for (const auto& h : projectively_factoring(m, n)) span.add(flatten(h));
  std::vector<ModuleMap> out;
  for (auto& f : hom_basis(m, n))
    if (span.add(flatten(f))) out.push_back(std::move(f));
  return out;
}

bool StableCategory::stably_equal(const Representation& m, const Representation& n, const ModuleMap& f,
                                  const ModuleMap& g) const {
  SpanBuilder span(m.p(), map_length(m, n));
  for (const auto& h : projectively_factoring(m, n)) span.add(flatten(h));
  PrimeField fld(m.p());
  return span.contains(flatten(add(f, scale(g, fld.neg(1)))));
}

Triangle StableCategory::cone(const Representation& m, const Representation& n, const ModuleMap& f) const {
  InjectiveHull hull = injective_hull(m);
  DirectSum mid = direct_sum(alg_, {hull.module, n});
  ModuleMap into = map_into_sum(mid, {hull.map, f}, m);
  Cokernel c = cokernel(m, mid.sum, into);
  Cokernel shift = cokernel(m, hull.module, hull.map);
  Triangle t;
  t.to_cone = compose(c.projection, mid.inclusions[1]);
  // (pi, 0): I(M) (+) N -> Sigma M vanishes on the image of M
  ModuleMap down = map_from_sum(mid, {shift.projection, zero_map(n, shift.module)}, shift.module);
  t.to_shift = factor_through_cokernel(c, shift.module, down);
  t.cone = std::move(c.module);
  t.shift = std::move(shift.module);
  return t;
}

}  // namespace extri
