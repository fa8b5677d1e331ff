#include "extri/representation.hpp"

#include <sstream>

#include "extri/errors.hpp"

namespace extri {

namespace {

std::size_t uz(int x) { return static_cast<std::size_t>(x); }

}  // namespace

int Representation::total_dim() const {
  int s = 0;
  for (int d : dims) s += d;
  return s;
}

Matrix Representation::path_action(const Path& path) const {
  Matrix m = Matrix::identity(p(), uz(dims[uz(path.source)]));
  for (int a : path.arrows) m = arrows[uz(a)] * m;
  return m;
}

bool Representation::satisfies_relations() const {
  for (const auto& rel : algebra->relations()) {
    const auto& first = rel.terms.front().second;
    int s = algebra->quiver().arrow(first.front()).source;
    int t = algebra->quiver().arrow(first.back()).target;
    Matrix acc(p(), uz(dims[uz(t)]), uz(dims[uz(s)]));
    for (const auto& [c, arrows_of_term] : rel.terms) {
      Path path{s, t, arrows_of_term};
      acc = acc + path_action(path).scaled(c);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::string Representation::key() const {
  std::ostringstream os;
  for (int d : dims) os << d << ",";
  os << "|";
  for (const auto& m : arrows) {
    for (Scalar x : m.data()) os << x << ",";
    os << ";";
  }
  return os.str();
}

bool ModuleMap::is_zero() const {
  for (const auto& b : blocks) {
    if (!b.is_zero()) return false;
  }
  return true;
}

Representation zero_representation(const AlgebraPtr& alg) {
  std::vector<int> dims(alg->num_vertices(), 0);
  return make_representation(alg, dims, {});
}

Representation make_representation(const AlgebraPtr& alg, std::vector<int> dims, std::vector<Matrix> arrows) {
  const auto& q = alg->quiver();
  if (dims.size() != q.num_vertices()) throw std::invalid_argument("dimension vector has wrong length");
  if (arrows.empty()) {
    for (const auto& a : q.arrows()) arrows.emplace_back(alg->p(), uz(dims[uz(a.target)]), uz(dims[uz(a.source)]));
  }
  if (arrows.size() != q.num_arrows()) throw std::invalid_argument("wrong number of arrow matrices");
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const Arrow& ar = q.arrow(static_cast<int>(a));
    if (arrows[a].rows() != uz(dims[uz(ar.target)]) || arrows[a].cols() != uz(dims[uz(ar.source)])) {
      throw std::invalid_argument("arrow matrix for '" + ar.name + "' has the wrong shape");
    }
  }
  Representation r{alg, std::move(dims), std::move(arrows)};
  if (!r.satisfies_relations()) throw Error("representation does not satisfy the relations");
  return r;
}

Representation simple_module(const AlgebraPtr& alg, int v) {
  if (v < 0 || uz(v) >= alg->num_vertices()) throw UnknownSymbolError("unknown vertex index");
  std::vector<int> dims(alg->num_vertices(), 0);
  dims[uz(v)] = 1;
  return make_representation(alg, dims, {});
}

Representation projective_module(const AlgebraPtr& alg, int v) {
  if (v < 0 || uz(v) >= alg->num_vertices()) throw UnknownSymbolError("unknown vertex index");
  const auto& q = alg->quiver();
  std::vector<int> dims(alg->num_vertices(), 0);
  std::vector<int> position(alg->dim(), -1);
  for (int s : alg->basis_from(v)) {
    int t = alg->basis_path(s).target;
    position[uz(s)] = dims[uz(t)]++;
  }
  std::vector<Matrix> arrows;
  for (std::size_t b = 0; b < q.num_arrows(); ++b) {
    const Arrow& ar = q.arrow(static_cast<int>(b));
    Matrix m(alg->p(), uz(dims[uz(ar.target)]), uz(dims[uz(ar.source)]));
    for (int s : alg->basis_from(v)) {
      if (alg->basis_path(s).target != ar.source) continue;
      for (auto [idx, c] : alg->append_arrow(s, static_cast<int>(b))) {
        m(uz(position[uz(idx)]), uz(position[uz(s)])) = c;
      }
    }
    arrows.push_back(std::move(m));
  }
  return make_representation(alg, dims, arrows);
}

Representation injective_module(const AlgebraPtr& alg, int v) {
  if (v < 0 || uz(v) >= alg->num_vertices()) throw UnknownSymbolError("unknown vertex index");
  const auto& q = alg->quiver();
  std::vector<int> dims(alg->num_vertices(), 0);
  std::vector<int> position(alg->dim(), -1);
  for (int s : alg->basis_to(v)) {
    int src = alg->basis_path(s).source;
    position[uz(s)] = dims[uz(src)]++;
  }
  std::vector<Matrix> arrows;
  for (std::size_t b = 0; b < q.num_arrows(); ++b) {
    const Arrow& ar = q.arrow(static_cast<int>(b));
    // (b.phi)(r) = phi(b r) for r a path from target(b) to v.
    Matrix m(alg->p(), uz(dims[uz(ar.target)]), uz(dims[uz(ar.source)]));
    for (int r : alg->basis_to(v)) {
      if (alg->basis_path(r).source != ar.target) continue;
      for (auto [idx, c] : alg->prepend_arrow(static_cast<int>(b), r)) {
        m(uz(position[uz(r)]), uz(position[uz(idx)])) = c;
      }
    }
    arrows.push_back(std::move(m));
  }
  return make_representation(alg, dims, arrows);
}

ModuleMap zero_map(const Representation& from, const Representation& to) {
  ModuleMap f;
  for (std::size_t v = 0; v < from.dims.size(); ++v) {
    f.blocks.emplace_back(from.p(), uz(to.dims[v]), uz(from.dims[v]));
  }
  return f;
}

ModuleMap identity_map(const Representation& m) {
  ModuleMap f;
  for (int d : m.dims) f.blocks.push_back(Matrix::identity(m.p(), uz(d)));
  return f;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap h;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(g.blocks[v] * f.blocks[v]);
  return h;
}

ModuleMap add(const ModuleMap& a, const ModuleMap& b) {
  ModuleMap h;
  for (std::size_t v = 0; v < a.blocks.size(); ++v) h.blocks.push_back(a.blocks[v] + b.blocks[v]);
  return h;
}

ModuleMap scale(const ModuleMap& a, Scalar c) {
  ModuleMap h;
  for (const auto& b : a.blocks) h.blocks.push_back(b.scaled(c));
  return h;
}

ModuleMap linear_combination(const std::vector<ModuleMap>& maps, const std::vector<Scalar>& coeffs,
                             const Representation& from, const Representation& to) {
  ModuleMap acc = zero_map(from, to);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (coeffs[i] != 0) acc = add(acc, scale(maps[i], coeffs[i]));
  }
  return acc;
}

bool is_homomorphism(const Representation& from, const Representation& to, const ModuleMap& f) {
  const auto& q = from.algebra->quiver();
  if (f.blocks.size() != from.dims.size()) return false;
  for (std::size_t v = 0; v < from.dims.size(); ++v) {
    if (f.blocks[v].rows() != uz(to.dims[v]) || f.blocks[v].cols() != uz(from.dims[v])) return false;
  }
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(static_cast<int>(a));
    if (!(f.blocks[uz(ar.target)] * from.arrows[a] == to.arrows[a] * f.blocks[uz(ar.source)])) return false;
  }
  return true;
}

std::size_t map_length(const Representation& from, const Representation& to) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < from.dims.size(); ++v) n += uz(from.dims[v]) * uz(to.dims[v]);
  return n;
}

std::vector<Scalar> flatten(const ModuleMap& f) {
  std::vector<Scalar> v;
  for (const auto& b : f.blocks) v.insert(v.end(), b.data().begin(), b.data().end());
  return v;
}

ModuleMap unflatten(const std::vector<Scalar>& v, const Representation& from, const Representation& to) {
  ModuleMap f;
  std::size_t pos = 0;
  for (std::size_t k = 0; k < from.dims.size(); ++k) {
    Matrix b(from.p(), uz(to.dims[k]), uz(from.dims[k]));
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = v[pos++];
    f.blocks.push_back(std::move(b));
  }
  return f;
}

DirectSum direct_sum(const AlgebraPtr& alg, const std::vector<Representation>& parts) {
  const auto& q = alg->quiver();
  std::size_t nv = alg->num_vertices();
  std::vector<int> dims(nv, 0);
  for (const auto& part : parts)
    for (std::size_t v = 0; v < nv; ++v) dims[v] += part.dims[v];
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(static_cast<int>(a));
    Matrix m(alg->p(), uz(dims[uz(ar.target)]), uz(dims[uz(ar.source)]));
    std::size_t r = 0, c = 0;
    for (const auto& part : parts) {
      m.set_block(r, c, part.arrows[a]);
      r += uz(part.dims[uz(ar.target)]);
      c += uz(part.dims[uz(ar.source)]);
    }
    arrows.push_back(std::move(m));
  }
  DirectSum s;
  s.sum = Representation{alg, dims, std::move(arrows)};
  std::vector<std::size_t> offset(nv, 0);
  for (const auto& part : parts) {
    ModuleMap inc, proj;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix i(alg->p(), uz(dims[v]), uz(part.dims[v]));
      for (std::size_t k = 0; k < uz(part.dims[v]); ++k) i(offset[v] + k, k) = 1;
      proj.blocks.push_back(i.transpose());
      inc.blocks.push_back(std::move(i));
      offset[v] += uz(part.dims[v]);
    }
    s.inclusions.push_back(std::move(inc));
    s.projections.push_back(std::move(proj));
  }
  return s;
}

ModuleMap map_from_sum(const DirectSum& s, const std::vector<ModuleMap>& components, const Representation& to) {
  ModuleMap f = zero_map(s.sum, to);
  for (std::size_t k = 0; k < components.size(); ++k) f = add(f, compose(components[k], s.projections[k]));
  return f;
}

ModuleMap map_into_sum(const DirectSum& s, const std::vector<ModuleMap>& components, const Representation& from) {
  ModuleMap f = zero_map(from, s.sum);
  for (std::size_t k = 0; k < components.size(); ++k) f = add(f, compose(s.inclusions[k], components[k]));
  return f;
}

std::vector<ModuleMap> hom_basis(const Representation& from, const Representation& to) {
  const auto& q = from.algebra->quiver();
  std::size_t nv = from.dims.size();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + uz(to.dims[v]) * uz(from.dims[v]);
  std::size_t unknowns = offset[nv];
  std::vector<ModuleMap> basis;
  if (unknowns == 0) return basis;

  PrimeField f(from.p());
  std::size_t eqs = 0;
  for (const auto& ar : q.arrows()) eqs += uz(to.dims[uz(ar.target)]) * uz(from.dims[uz(ar.source)]);
  Matrix sys(from.p(), eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(static_cast<int>(a));
    std::size_t s = uz(ar.source), t = uz(ar.target);
    std::size_t ms = uz(from.dims[s]), mt = uz(from.dims[t]), ns = uz(to.dims[s]), nt = uz(to.dims[t]);
    const Matrix& ma = from.arrows[a];
    const Matrix& na = to.arrows[a];
    // (B_t M_a - N_a B_s)[i][j] = 0
    for (std::size_t i = 0; i < nt; ++i) {
      for (std::size_t j = 0; j < ms; ++j, ++row) {
        for (std::size_t k = 0; k < mt; ++k) {
          Scalar c = ma(k, j);
          if (c) {
            std::size_t u = offset[t] + i * mt + k;
            sys(row, u) = f.add(sys(row, u), c);
          }
        }
        for (std::size_t k = 0; k < ns; ++k) {
          Scalar c = na(i, k);
          if (c) {
            std::size_t u = offset[s] + k * ms + j;
            sys(row, u) = f.sub(sys(row, u), c);
          }
        }
      }
    }
  }
  Matrix ns = nullspace(sys);
  for (std::size_t k = 0; k < ns.cols(); ++k) basis.push_back(unflatten(ns.column(k), from, to));
  return basis;
}

std::size_t hom_dim(const Representation& from, const Representation& to) { return hom_basis(from, to).size(); }

Kernel submodule(const Representation& m, const std::vector<Matrix>& basis) {
  const auto& q = m.algebra->quiver();
  std::vector<int> dims;
  for (const auto& b : basis) dims.push_back(static_cast<int>(b.cols()));
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(static_cast<int>(a));
    const Matrix& bs = basis[uz(ar.source)];
    const Matrix& bt = basis[uz(ar.target)];
    arrows.push_back(coordinates(bt, m.arrows[a] * bs));
  }
  Kernel k;
  k.module = Representation{m.algebra, dims, std::move(arrows)};
  k.inclusion.blocks = basis;
  return k;
}

Kernel kernel(const Representation& from, const Representation&, const ModuleMap& f) {
  std::vector<Matrix> basis;
  for (const auto& b : f.blocks) basis.push_back(nullspace(b));
  return submodule(from, basis);
}

Cokernel cokernel(const Representation& from, const Representation& to, const ModuleMap& f) {
  (void)from;
  const auto& q = to.algebra->quiver();
  std::size_t nv = to.dims.size();
  std::vector<Matrix> proj(nv), sec(nv);
  std::vector<int> dims(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    proj[v] = left_nullspace(f.blocks[v]);
    if (proj[v].cols() != uz(to.dims[v])) proj[v] = Matrix(to.p(), 0, uz(to.dims[v]));
    dims[v] = static_cast<int>(proj[v].rows());
    auto r = solve(proj[v], Matrix::identity(to.p(), proj[v].rows()));
    if (!r) throw std::logic_error("cokernel: projection is not surjective");
    sec[v] = *r;
  }
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(static_cast<int>(a));
    arrows.push_back(proj[uz(ar.target)] * to.arrows[a] * sec[uz(ar.source)]);
  }
  Cokernel c;
  c.module = Representation{to.algebra, dims, std::move(arrows)};
  c.projection.blocks = std::move(proj);
  c.sections = std::move(sec);
  return c;
}

Image image(const Representation& from, const Representation& to, const ModuleMap& f) {
  std::vector<Matrix> basis;
  for (const auto& b : f.blocks) basis.push_back(column_basis(b));
  Kernel sub = submodule(to, basis);
  Image im;
  im.module = sub.module;
  im.inclusion = sub.inclusion;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    im.onto.blocks.push_back(coordinates(basis[v], f.blocks[v]));
  }
  (void)from;
  return im;
}

ModuleMap factor_through_cokernel(const Cokernel& c, const Representation&, const ModuleMap& g) {
  ModuleMap h;
  for (std::size_t v = 0; v < g.blocks.size(); ++v) h.blocks.push_back(g.blocks[v] * c.sections[v]);
  return h;
}

bool is_injective_map(const ModuleMap& f) {
  for (const auto& b : f.blocks) {
    if (rank(b) != b.cols()) return false;
  }
  return true;
}

bool is_surjective_map(const Representation& to, const ModuleMap& f) {
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    if (rank(f.blocks[v]) != uz(to.dims[v])) return false;
  }
  return true;
}

bool is_isomorphism_map(const Representation& from, const Representation& to, const ModuleMap& f) {
  if (from.dims != to.dims) return false;
  return is_injective_map(f);
}

Kernel radical(const Representation& m) {
  const auto& q = m.algebra->quiver();
  std::vector<Matrix> basis;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    Matrix gens(m.p(), uz(m.dims[v]), 0);
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      if (uz(q.arrow(static_cast<int>(a)).target) == v) gens = hstack(gens, m.arrows[a]);
    }
    basis.push_back(column_basis(gens));
  }
  return submodule(m, basis);
}

Kernel socle(const Representation& m) {
  const auto& q = m.algebra->quiver();
  std::vector<Matrix> basis;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    Matrix stacked(m.p(), 0, uz(m.dims[v]));
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      if (uz(q.arrow(static_cast<int>(a)).source) == v) stacked = vstack(stacked, m.arrows[a]);
    }
    basis.push_back(nullspace(stacked));
  }
  return submodule(m, basis);
}

std::vector<int> top_dims(const Representation& m) {
  Kernel r = radical(m);
  std::vector<int> t(m.dims.size());
  for (std::size_t v = 0; v < t.size(); ++v) t[v] = m.dims[v] - r.module.dims[v];
  return t;
}

std::vector<int> socle_dims(const Representation& m) { return socle(m).module.dims; }

}  // namespace extri
