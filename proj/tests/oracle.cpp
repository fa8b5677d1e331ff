#include "oracle.hpp"

#include <stdexcept>

#include "extri/matrix.hpp"

namespace oracle {

using extri::Matrix;
using extri::PrimeField;
using extri::Scalar;

namespace {

struct System {
  std::size_t unknowns = 0;
  std::vector<std::vector<Scalar>> rows;

  std::size_t solution_dim(std::uint32_t p) const {
    if (unknowns == 0) return 0;
    if (rows.empty()) return unknowns;
    return unknowns - extri::rank(Matrix::from_rows(p, rows));
  }
};

/// rep_{a_{to-1}} ... rep_{a_from}, or the identity at `vertex` when empty.
Matrix chain(const Representation& rep, const std::vector<int>& arrows, std::size_t from, std::size_t to,
             int vertex) {
  Matrix acc = Matrix::identity(rep.p(), static_cast<std::size_t>(rep.dims[static_cast<std::size_t>(vertex)]));
  for (std::size_t i = from; i < to; ++i) acc = rep.arrows[static_cast<std::size_t>(arrows[i])] * acc;
  return acc;
}

}  // namespace

std::size_t hom_dim(const Representation& m, const Representation& n) {
  const auto& alg = *m.algebra;
  const PrimeField f(m.p());
  const std::size_t nv = alg.num_vertices();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v)
    offset[v + 1] = offset[v] + static_cast<std::size_t>(n.dims[v] * m.dims[v]);
  System sys;
  sys.unknowns = offset[nv];
  // h_v is n_v x m_v, entry (r, c) at offset[v] + r * m_v + c.
  for (std::size_t a = 0; a < alg.quiver().num_arrows(); ++a) {
    const auto& arr = alg.quiver().arrow(static_cast<int>(a));
    const auto s = static_cast<std::size_t>(arr.source), t = static_cast<std::size_t>(arr.target);
    const Matrix& ma = m.arrows[a];
    const Matrix& na = n.arrows[a];
    const auto ms = static_cast<std::size_t>(m.dims[s]), mt = static_cast<std::size_t>(m.dims[t]);
    const auto ns = static_cast<std::size_t>(n.dims[s]), nt = static_cast<std::size_t>(n.dims[t]);
    for (std::size_t u = 0; u < nt; ++u)
      for (std::size_t w = 0; w < ms; ++w) {
        std::vector<Scalar> row(sys.unknowns, 0);
        for (std::size_t r = 0; r < mt; ++r) {
          auto& e = row[offset[t] + u * mt + r];
          e = f.add(e, ma(r, w));
        }
        for (std::size_t r = 0; r < ns; ++r) {
          auto& e = row[offset[s] + r * ms + w];
          e = f.sub(e, na(u, r));
        }
        sys.rows.push_back(std::move(row));
      }
  }
  return sys.solution_dim(m.p());
}

std::size_t ext1_dim(const Representation& m, const Representation& n) {
  const auto& alg = *m.algebra;
  const auto& quiver = alg.quiver();
  const PrimeField f(m.p());
  const std::size_t na = quiver.num_arrows();
  std::vector<std::size_t> offset(na + 1, 0);
  for (std::size_t a = 0; a < na; ++a) {
    const auto& arr = quiver.arrow(static_cast<int>(a));
    offset[a + 1] = offset[a] + static_cast<std::size_t>(n.dims[static_cast<std::size_t>(arr.target)] *
                                                         m.dims[static_cast<std::size_t>(arr.source)]);
  }
  System cocycles;
  cocycles.unknowns = offset[na];
  for (const auto& rel : alg.relations()) {
    if (rel.terms.empty()) continue;
    const auto& first = rel.terms.front().second;
    const int s = quiver.arrow(first.front()).source;
    const int t = quiver.arrow(first.back()).target;
    const auto rows = static_cast<std::size_t>(n.dims[static_cast<std::size_t>(t)]);
    const auto cols = static_cast<std::size_t>(m.dims[static_cast<std::size_t>(s)]);
    // One linear form per entry (u, w) of the relation's upper right block.
    std::vector<std::vector<Scalar>> block(rows * cols, std::vector<Scalar>(cocycles.unknowns, 0));
    for (const auto& [coef, path] : rel.terms) {
      for (std::size_t i = 0; i < path.size(); ++i) {
        const auto& arr = quiver.arrow(path[i]);
        Matrix left = chain(n, path, i + 1, path.size(), arr.target);
        Matrix right = chain(m, path, 0, i, s);
        const auto dr = static_cast<std::size_t>(n.dims[static_cast<std::size_t>(arr.target)]);
        const auto dc = static_cast<std::size_t>(m.dims[static_cast<std::size_t>(arr.source)]);
        const std::size_t base = offset[static_cast<std::size_t>(path[i])];
        for (std::size_t u = 0; u < rows; ++u)
          for (std::size_t w = 0; w < cols; ++w)
            for (std::size_t r = 0; r < dr; ++r) {
              Scalar lu = f.mul(coef, left(u, r));
              if (lu == 0) continue;
              for (std::size_t c = 0; c < dc; ++c) {
                auto& e = block[u * cols + w][base + r * dc + c];
                e = f.add(e, f.mul(lu, right(c, w)));
              }
            }
      }
    }
    for (auto& row : block) cocycles.rows.push_back(std::move(row));
  }
  std::size_t z = cocycles.solution_dim(m.p());
  std::size_t all_vertex_maps = 0;
  for (std::size_t v = 0; v < alg.num_vertices(); ++v)
    all_vertex_maps += static_cast<std::size_t>(n.dims[v] * m.dims[v]);
  std::size_t b = all_vertex_maps - oracle::hom_dim(m, n);
  if (b > z) throw std::logic_error("oracle: coboundaries exceed cocycles");
  return z - b;
}

std::vector<int> top_dims(const Representation& m) {
  const auto& quiver = m.algebra->quiver();
  std::vector<int> out(m.dims.size(), 0);
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    const auto dv = static_cast<std::size_t>(m.dims[v]);
    if (dv == 0) continue;
    Matrix images(m.p(), dv, 0);
    for (std::size_t a = 0; a < quiver.num_arrows(); ++a)
      if (static_cast<std::size_t>(quiver.arrow(static_cast<int>(a)).target) == v)
        images = images.cols() == 0 ? m.arrows[a] : extri::hstack(images, m.arrows[a]);
    out[v] = static_cast<int>(dv - (images.cols() == 0 ? 0 : extri::rank(images)));
  }
  return out;
}

Representation syzygy(const Representation& m) {
  const auto& alg = *m.algebra;
  const auto& quiver = alg.quiver();
  const std::uint32_t p = m.p();
  const std::size_t nv = alg.num_vertices();

  // Generators: per vertex, vectors completing the radical part to a basis.
  struct Gen {
    int vertex;
    std::vector<Scalar> vec;
  };
  std::vector<Gen> gens;
  for (std::size_t v = 0; v < nv; ++v) {
    const auto dv = static_cast<std::size_t>(m.dims[v]);
    if (dv == 0) continue;
    extri::SpanBuilder span(p, dv);
    for (std::size_t a = 0; a < quiver.num_arrows(); ++a)
      if (static_cast<std::size_t>(quiver.arrow(static_cast<int>(a)).target) == v)
        for (std::size_t c = 0; c < m.arrows[a].cols(); ++c) span.add(m.arrows[a].column(c));
    for (std::size_t i = 0; i < dv; ++i) {
      std::vector<Scalar> e(dv, 0);
      e[i] = 1;
      if (span.add(e)) gens.push_back({static_cast<int>(v), e});
    }
  }

  // P at vertex w: pairs (generator, basis path from its vertex ending at w).
  std::vector<std::vector<std::pair<std::size_t, int>>> cells(nv);
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (int q : alg.basis_from(gens[g].vertex)) cells[static_cast<std::size_t>(alg.basis_path(q).target)].push_back({g, q});

  std::vector<Matrix> kernel_basis(nv);
  std::vector<int> dims(nv, 0);
  for (std::size_t w = 0; w < nv; ++w) {
    const auto mw = static_cast<std::size_t>(m.dims[w]);
    Matrix phi(p, mw, cells[w].size());
    for (std::size_t j = 0; j < cells[w].size(); ++j) {
      auto [g, q] = cells[w][j];
      Matrix gv = Matrix::from_columns(p, gens[g].vec.size(), {gens[g].vec});
      Matrix img = m.path_action(alg.basis_path(q)) * gv;
      for (std::size_t r = 0; r < mw; ++r) phi(r, j) = img(r, 0);
    }
    if (cells[w].empty()) kernel_basis[w] = Matrix(p, 0, 0);
    else kernel_basis[w] = mw == 0 ? Matrix::identity(p, cells[w].size()) : extri::nullspace(phi);
    dims[w] = static_cast<int>(kernel_basis[w].cols());
  }

  std::vector<Matrix> arrows;
  for (std::size_t b = 0; b < quiver.num_arrows(); ++b) {
    const auto& arr = quiver.arrow(static_cast<int>(b));
    const auto s = static_cast<std::size_t>(arr.source), t = static_cast<std::size_t>(arr.target);
    // Action of b on P from vertex s to t in the cell bases.
    Matrix act(p, cells[t].size(), cells[s].size());
    for (std::size_t j = 0; j < cells[s].size(); ++j) {
      auto [g, q] = cells[s][j];
      for (auto [idx, coef] : alg.append_arrow(q, static_cast<int>(b))) {
        for (std::size_t i = 0; i < cells[t].size(); ++i)
          if (cells[t][i].first == g && cells[t][i].second == idx) act(i, j) = coef;
      }
    }
    if (dims[s] == 0 || dims[t] == 0) {
      arrows.emplace_back(p, static_cast<std::size_t>(dims[t]), static_cast<std::size_t>(dims[s]));
      continue;
    }
    arrows.push_back(extri::coordinates(kernel_basis[t], act * kernel_basis[s]));
  }
  return extri::make_representation(m.algebra, dims, arrows);
}

std::size_t ext_dim(int k, const Representation& m, const Representation& n) {
  if (k < 1) throw std::invalid_argument("oracle::ext_dim needs k >= 1");
  Representation cur = m;
  for (int i = 1; i < k; ++i) cur = oracle::syzygy(cur);
  return ext1_dim(cur, n);
}

Table ext_table(const extri::Context& ctx, int kmax) {
  const std::size_t n = ctx.size();
  Table t(static_cast<std::size_t>(kmax), std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n, 0)));
  for (std::size_t a = 0; a < n; ++a) {
    Representation cur = ctx.module(static_cast<int>(a));
    for (int k = 1; k <= kmax; ++k) {
      for (std::size_t b = 0; b < n; ++b) t[static_cast<std::size_t>(k - 1)][a][b] = ext1_dim(cur, ctx.module(static_cast<int>(b)));
      cur = oracle::syzygy(cur);
    }
  }
  return t;
}

std::vector<int> bits(std::uint64_t mask, std::size_t n) {
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

bool vanishes(const Table& t, std::size_t a, std::size_t b, int kmax) {
  for (int k = 1; k <= kmax; ++k)
    if (t[static_cast<std::size_t>(k - 1)][a][b] != 0) return false;
  return true;
}

}  // namespace

std::vector<std::uint64_t> cluster_tilting_sets(const Table& t, int d) {
  const std::size_t n = t.empty() ? 0 : t[0].size();
  if (n > 20) throw std::invalid_argument("oracle: too many objects for subset enumeration");
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    std::uint64_t right = 0, left = 0;
    for (std::size_t m = 0; m < n; ++m) {
      bool r = true, l = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(x >> i & 1)) continue;
        r = r && vanishes(t, i, m, d - 1);
        l = l && vanishes(t, m, i, d - 1);
      }
      if (r) right |= std::uint64_t{1} << m;
      if (l) left |= std::uint64_t{1} << m;
    }
    if (right == x && left == x) out.push_back(x);
  }
  return out;
}

std::uint64_t projective_mask(const Table& t) {
  const std::size_t n = t.empty() ? 0 : t[0].size();
  std::uint64_t mask = 0;
  for (std::size_t a = 0; a < n; ++a) {
    bool zero = true;
    for (std::size_t b = 0; b < n; ++b) zero = zero && t[0][a][b] == 0;
    if (zero) mask |= std::uint64_t{1} << a;
  }
  return mask;
}

std::uint64_t injective_mask(const Table& t) {
  const std::size_t n = t.empty() ? 0 : t[0].size();
  std::uint64_t mask = 0;
  for (std::size_t b = 0; b < n; ++b) {
    bool zero = true;
    for (std::size_t a = 0; a < n; ++a) zero = zero && t[0][a][b] == 0;
    if (zero) mask |= std::uint64_t{1} << b;
  }
  return mask;
}

}  // namespace oracle
