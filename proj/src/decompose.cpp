#include "extri/decompose.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "extri/errors.hpp"
#include "extri/poly.hpp"

namespace extri {

namespace {

constexpr int kSplitAttempts = 64;

ModuleMap random_map(const std::vector<ModuleMap>& basis, const Representation& from, const Representation& to,
                     std::mt19937_64& rng) {
  std::vector<Scalar> c(basis.size());
  for (auto& x : c) x = static_cast<Scalar>(rng() % from.p());
  return linear_combination(basis, c, from, to);
}

Matrix eval_poly(const Poly& f, const Matrix& a) {
  Matrix r(a.p(), a.rows(), a.cols());
  Matrix id = Matrix::identity(a.p(), a.rows());
  for (std::size_t i = f.size(); i-- > 0;) r = r * a + id.scaled(f[i]);
  return r;
}

ModuleMap eval_poly(const Poly& f, const ModuleMap& phi) {
  ModuleMap r;
  for (const auto& b : phi.blocks) r.blocks.push_back(eval_poly(f, b));
  return r;
}

Matrix matrix_power(Matrix a, std::size_t e) {
  Matrix r = Matrix::identity(a.p(), a.rows());
  while (e) {
    if (e & 1) r = r * a;
    e >>= 1;
    if (e) a = a * a;
  }
  return r;
}

Poly minimal_polynomial_of(const Representation& m, const ModuleMap& phi) {
  return poly::minimal_polynomial(m.p(), flatten(identity_map(m)), [&](const std::vector<Scalar>& v) {
    return flatten(compose(phi, unflatten(v, m, m)));
  });
}

/// Fitting decomposition m = ker(psi^N) + im(psi^N); empty if trivial.
std::optional<std::pair<Representation, Representation>> fitting_split(const Representation& m,
                                                                       const ModuleMap& psi) {
  std::size_t n = static_cast<std::size_t>(m.total_dim());
  ModuleMap power;
  for (const auto& b : psi.blocks) power.blocks.push_back(matrix_power(b, n));
  Kernel k = kernel(m, m, power);
  int kd = k.module.total_dim();
  if (kd == 0 || kd == m.total_dim()) return std::nullopt;
  Image im = image(m, m, power);
  return std::make_pair(std::move(k.module), std::move(im.module));
}

// ---- locality certificate -------------------------------------------------

/// Integer trace of a^e modulo `modulus`, with a lifted to [0, p).
std::uint64_t lifted_trace_power(const Matrix& a, std::uint64_t e, std::uint64_t modulus) {
  std::size_t n = a.rows();
  if (n == 0) return 0;
  using Mat = std::vector<std::uint64_t>;
  auto mul = [&](const Mat& x, const Mat& y) {
    Mat z(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t v = x[i * n + k];
        if (!v) continue;
        for (std::size_t j = 0; j < n; ++j) z[i * n + j] = (z[i * n + j] + v * y[k * n + j]) % modulus;
      }
    return z;
  };
  Mat base(a.data().begin(), a.data().end());
  for (auto& v : base) v %= modulus;
  Mat r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1 % modulus;
  while (e) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < n; ++i) t = (t + r[i * n + i]) % modulus;
  return t;
}

class EndCertificate {
 public:
  EndCertificate(const Representation& m, const std::vector<ModuleMap>& basis)
      : m_(m), basis_(basis), len_(map_length(m, m)) {}

  bool certify(std::mt19937_64& rng) const {
    if (basis_.empty()) return false;
    if (basis_.size() == 1) return true;
    if (auto j = eigen_shift_radical(); j && verify(*j, rng)) return true;
    if (auto j = trace_radical(); verify(j, rng)) return true;
    return false;
  }

 private:
  /// Radical candidate when every basis element has a single eigenvalue:
  /// span of e_i - c_i.
  std::optional<std::vector<ModuleMap>> eigen_shift_radical() const {
    PrimeField f(m_.p());
    ModuleMap id = identity_map(m_);
    SpanBuilder span(m_.p(), len_);
    std::vector<ModuleMap> out;
    for (const auto& e : basis_) {
      Poly r = poly::radical(f, minimal_polynomial_of(m_, e));
      if (poly::degree(r) != 1) return std::nullopt;
      ModuleMap shifted = add(e, scale(id, r[0]));  // e - c with c = -r[0]
      if (span.add(flatten(shifted))) out.push_back(std::move(shifted));
    }
    return out;
  }

  /// Characteristic-p radical by iterated trace conditions on integer lifts.
  std::vector<ModuleMap> trace_radical() const {
    const std::uint64_t p = m_.p();
    std::uint64_t n = static_cast<std::uint64_t>(m_.total_dim());
    std::vector<ModuleMap> current = basis_;
    std::uint64_t pi = 1;  // p^i
    for (int i = 0; pi <= n; ++i, pi *= p) {
      std::uint64_t modulus = pi * p;
      // coefficient matrix: rows = basis_ elements b, cols = current elements a
      Matrix g(m_.p(), basis_.size(), current.size());
      for (std::size_t c = 0; c < current.size(); ++c) {
        for (std::size_t r = 0; r < basis_.size(); ++r) {
          ModuleMap prod = compose(current[c], basis_[r]);
          std::uint64_t t = 0;
          for (const auto& b : prod.blocks) t = (t + lifted_trace_power(b, pi, modulus)) % modulus;
          g(r, c) = static_cast<Scalar>((t / pi) % p);
        }
      }
      Matrix ns = nullspace(g);
      std::vector<ModuleMap> next;
      for (std::size_t k = 0; k < ns.cols(); ++k) {
        next.push_back(linear_combination(current, ns.column(k), m_, m_));
      }
      current = std::move(next);
      if (current.empty()) break;
    }
    return current;
  }

  bool verify(const std::vector<ModuleMap>& j, std::mt19937_64& rng) const {
    std::size_t d = basis_.size();
    if (j.size() >= d) return false;
    SpanBuilder jspan(m_.p(), len_);
    for (const auto& x : j)
      if (!jspan.add(flatten(x))) return false;
    // two-sided ideal
    for (const auto& e : basis_) {
      for (const auto& x : j) {
        if (!jspan.contains(flatten(compose(e, x))) || !jspan.contains(flatten(compose(x, e)))) return false;
      }
    }
    // nilpotent: the powers J^k strictly decrease to zero
    std::vector<ModuleMap> power = j;
    while (!power.empty()) {
      SpanBuilder next_span(m_.p(), len_);
      std::vector<ModuleMap> next;
      for (const auto& x : j)
        for (const auto& y : power) {
          ModuleMap z = compose(x, y);
          if (next_span.add(flatten(z))) next.push_back(std::move(z));
        }
      if (next.size() >= power.size()) return false;
      power = std::move(next);
    }
    return quotient_is_field(j, jspan, rng);
  }

  bool quotient_is_field(const std::vector<ModuleMap>& j, const SpanBuilder& jspan, std::mt19937_64& rng) const {
    std::size_t q = basis_.size() - j.size();
    if (q == 1) return true;
    // complement of J among the basis elements
    SpanBuilder span = jspan;
    std::vector<ModuleMap> comp;
    for (const auto& e : basis_)
      if (span.add(flatten(e))) comp.push_back(e);
    if (comp.size() != q) return false;
    // structure constants of E/J in the complement basis
    Matrix full(m_.p(), len_, j.size() + q);
    std::size_t col = 0;
    for (const std::vector<ModuleMap>* group : {&j, static_cast<const std::vector<ModuleMap>*>(&comp)})
      for (const auto& x : *group) {
        auto v = flatten(x);
        for (std::size_t i = 0; i < len_; ++i) full(i, col) = v[i];
        ++col;
      }
    Matrix prods(m_.p(), len_, q * q);
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b) {
        auto v = flatten(compose(comp[a], comp[b]));
        for (std::size_t i = 0; i < len_; ++i) prods(i, a * q + b) = v[i];
      }
    Matrix coords = coordinates(full, prods);
    auto mult = [&](std::size_t a, std::size_t b, std::size_t c) { return coords(j.size() + c, a * q + b); };
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b)
        for (std::size_t c = 0; c < q; ++c)
          if (mult(a, b, c) != mult(b, a, c)) return false;
    // left multiplication matrices
    std::vector<Matrix> left(q, Matrix(m_.p(), q, q));
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b)
        for (std::size_t c = 0; c < q; ++c) left[a](c, b) = mult(a, b, c);
    PrimeField f(m_.p());
    for (int attempt = 0; attempt < 32; ++attempt) {
      Matrix la(m_.p(), q, q);
      for (std::size_t a = 0; a < q; ++a) la = la + left[a].scaled(static_cast<Scalar>(rng() % m_.p()));
      Matrix id = Matrix::identity(m_.p(), q);
      Poly mu = poly::minimal_polynomial(m_.p(), id.data(), [&](const std::vector<Scalar>& v) {
        Matrix x(m_.p(), q, q);
        for (std::size_t i = 0; i < v.size(); ++i) x(i / q, i % q) = v[i];
        return (la * x).data();
      });
      if (static_cast<std::size_t>(poly::degree(mu)) == q) return poly::is_irreducible(f, mu);
    }
    return false;
  }

  const Representation& m_;
  const std::vector<ModuleMap>& basis_;
  std::size_t len_;
};

std::string dims_text(const std::vector<int>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(d[i]);
  }
  return s;
}

}  // namespace

std::vector<Representation> split_indecomposables(const Representation& m, std::mt19937_64& rng) {
  std::vector<Representation> result;
  std::vector<Representation> stack;
  if (!m.is_zero()) stack.push_back(m);
  PrimeField f(m.p());
  while (!stack.empty()) {
    Representation cur = std::move(stack.back());
    stack.pop_back();
    std::vector<ModuleMap> end = hom_basis(cur, cur);
    if (end.size() == 1) {
      result.push_back(std::move(cur));
      continue;
    }
    bool done = false;
    bool certificate_tried = false;
    for (int attempt = 0; attempt < kSplitAttempts && !done; ++attempt) {
      ModuleMap phi = random_map(end, cur, cur, rng);
      Poly factor = poly::proper_factor(f, minimal_polynomial_of(cur, phi), rng);
      if (!factor.empty()) {
        if (auto parts = fitting_split(cur, eval_poly(factor, phi))) {
          stack.push_back(std::move(parts->second));
          stack.push_back(std::move(parts->first));
          done = true;
          break;
        }
      }
      if (attempt == 3 || attempt == kSplitAttempts - 1) {
        if (!certificate_tried || attempt == kSplitAttempts - 1) {
          certificate_tried = true;
          if (EndCertificate(cur, end).certify(rng)) {
            result.push_back(std::move(cur));
            done = true;
          }
        }
      }
    }
    if (!done) {
      throw DecompositionFailure("could not split or certify a module of dimension vector " + dims_text(cur.dims));
    }
  }
  return result;
}

std::string fingerprint(const Representation& m) {
  std::ostringstream os;
  os << dims_text(m.dims) << "|t" << dims_text(top_dims(m)) << "|s" << dims_text(socle_dims(m)) << "|e"
     << hom_dim(m, m) << "|r";
  const auto& alg = *m.algebra;
  for (const auto& path : alg.basis()) {
    if (path.length() == 0) continue;
    if (m.dims[static_cast<std::size_t>(path.source)] == 0 || m.dims[static_cast<std::size_t>(path.target)] == 0)
      continue;
    os << rank(m.path_action(path)) << ",";
  }
  return os.str();
}

bool indecomposables_isomorphic(const Representation& a, const Representation& b) {
  if (a.dims != b.dims) return false;
  if (a.is_zero()) return true;
  auto ab = hom_basis(a, b);
  if (ab.empty()) return false;
  auto ba = hom_basis(b, a);
  for (const auto& f : ab)
    for (const auto& g : ba)
      if (is_injective_map(compose(g, f))) return true;
  return false;
}

bool is_isomorphic(const Representation& a, const Representation& b, std::uint64_t seed) {
  if (a.dims != b.dims) return false;
  if (a.is_zero()) return true;
  if (a.key() == b.key()) return true;
  auto h = hom_basis(a, b);
  if (h.empty()) return false;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int i = 0; i < 16; ++i) {
    if (is_injective_map(random_map(h, a, b, rng))) return true;
  }
  // exact fallback: compare indecomposable summands
  auto pa = split_indecomposables(a, rng);
  auto pb = split_indecomposables(b, rng);
  if (pa.size() != pb.size()) return false;
  std::vector<bool> used(pb.size(), false);
  for (const auto& x : pa) {
    bool matched = false;
    for (std::size_t k = 0; k < pb.size() && !matched; ++k) {
      if (!used[k] && indecomposables_isomorphic(x, pb[k])) {
        used[k] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

std::vector<Summand> decompose(const Representation& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pieces = split_indecomposables(m, rng);
  std::vector<std::pair<std::string, Summand>> groups;
  for (auto& piece : pieces) {
    std::string fp = fingerprint(piece);
    bool found = false;
    for (auto& [gfp, s] : groups) {
      if (gfp == fp && indecomposables_isomorphic(s.module, piece)) {
        ++s.multiplicity;
        found = true;
        break;
      }
    }
    if (!found) groups.push_back({fp, Summand{std::move(piece), 1}});
  }
  std::stable_sort(groups.begin(), groups.end(), [](const auto& x, const auto& y) {
    int dx = x.second.module.total_dim(), dy = y.second.module.total_dim();
    if (dx != dy) return dx < dy;
    if (x.second.module.dims != y.second.module.dims) return x.second.module.dims < y.second.module.dims;
    return x.first < y.first;
  });
  std::vector<Summand> out;
  for (auto& g : groups) out.push_back(std::move(g.second));
  return out;
}

bool is_indecomposable(const Representation& m, std::uint64_t seed) {
  if (m.is_zero()) return false;
  std::mt19937_64 rng(seed);
  return split_indecomposables(m, rng).size() == 1;
}

}  // namespace extri
