#include "extri/poly.hpp"

#include <stdexcept>

namespace extri::poly {

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly monic(const PrimeField& f, Poly a) {
  trim(a);
  if (a.empty()) return a;
  Scalar inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, inv);
  return a;
}

Poly sub(const PrimeField& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(r);
  return r;
}

Poly mul(const PrimeField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const PrimeField& f, const Poly& a, const Poly& b) {
  Poly bb = b;
  trim(bb);
  if (bb.empty()) throw std::invalid_argument("polynomial division by zero");
  Poly r = a;
  trim(r);
  if (r.size() < bb.size()) return {{}, r};
  Poly q(r.size() - bb.size() + 1, 0);
  Scalar lead_inv = f.inv(bb.back());
  for (std::size_t i = r.size(); i-- >= bb.size();) {
    Scalar c = f.mul(r[i], lead_inv);
    if (c == 0) continue;
    std::size_t shift = i + 1 - bb.size();
    q[shift] = c;
    for (std::size_t j = 0; j < bb.size(); ++j) r[shift + j] = f.sub(r[shift + j], f.mul(c, bb[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

Poly mod(const PrimeField& f, const Poly& a, const Poly& b) { return divmod(f, a, b).second; }

Poly gcd(const PrimeField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

Poly powmod(const PrimeField& f, Poly base, std::uint64_t e, const Poly& m) {
  Poly result = mod(f, Poly{1}, m);
  base = mod(f, base, m);
  while (e) {
    if (e & 1) result = mod(f, mul(f, result, base), m);
    e >>= 1;
    if (e) base = mod(f, mul(f, base, base), m);
  }
  return result;
}

namespace {

Poly derivative(const PrimeField& f, const Poly& a) {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(f.mul(a[i], f.reduce(static_cast<std::int64_t>(i))));
  trim(d);
  return d;
}

// a(x) = b(x^p) with every exponent divisible by p; returns b, which is the
// p-th root of a since c^p = c in F_p.
Poly pth_root(std::uint32_t p, const Poly& a) {
  Poly b;
  for (std::size_t i = 0; i < a.size(); i += p) b.push_back(a[i]);
  trim(b);
  return b;
}

Poly x_poly() { return Poly{0, 1}; }

}  // namespace

Poly radical(const PrimeField& f, const Poly& a_in) {
  Poly a = monic(f, a_in);
  if (degree(a) <= 0) return Poly{1};
  Poly d = derivative(f, a);
  if (d.empty()) return radical(f, pth_root(f.p(), a));
  Poly g = gcd(f, a, d);
  Poly w = monic(f, divmod(f, a, g).first);
  // strip from g every factor already present in w; what remains has all
  // multiplicities divisible by p
  Poly rest = g;
  while (true) {
    Poly c = gcd(f, rest, w);
    if (degree(c) <= 0) break;
    rest = divmod(f, rest, c).first;
  }
  rest = monic(f, rest);
  if (degree(rest) <= 0) return w;
  return monic(f, mul(f, w, radical(f, pth_root(f.p(), rest))));
}

bool is_irreducible(const PrimeField& f, const Poly& a_in) {
  Poly a = monic(f, a_in);
  int n = degree(a);
  if (n <= 0) return false;
  Poly h = x_poly();
  for (int i = 1; i <= n / 2; ++i) {
    h = powmod(f, h, f.p(), a);
    Poly g = gcd(f, a, sub(f, h, x_poly()));
    if (degree(g) > 0) return false;
  }
  return true;
}

namespace {

// Splits a product of distinct irreducibles of common degree k.
Poly equal_degree_factor(const PrimeField& f, const Poly& g, int k, std::mt19937_64& rng) {
  int n = degree(g);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Poly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = static_cast<Scalar>(rng() % f.p());
    trim(a);
    if (degree(a) <= 0) continue;
    Poly t;
    if (f.p() == 2) {
      // trace map a + a^2 + ... + a^(2^(k-1))
      Poly term = mod(f, a, g);
      t = term;
      for (int i = 1; i < k; ++i) {
        term = mod(f, mul(f, term, term), g);
        Poly sum(std::max(t.size(), term.size()), 0);
        for (std::size_t j = 0; j < t.size(); ++j) sum[j] = t[j];
        for (std::size_t j = 0; j < term.size(); ++j) sum[j] = f.add(sum[j], term[j]);
        trim(sum);
        t = sum;
      }
    } else {
      // a^((p^k - 1)/2) = prod_i (a^((p-1)/2))^(p^i)
      Poly b = powmod(f, a, (f.p() - 1) / 2, g);
      Poly c = b;
      t = b;
      for (int i = 1; i < k; ++i) {
        c = powmod(f, c, f.p(), g);
        t = mod(f, mul(f, t, c), g);
      }
      t = sub(f, t, Poly{1});
    }
    Poly d = gcd(f, g, t);
    if (degree(d) > 0 && degree(d) < n) return d;
  }
  return {};
}

}  // namespace

Poly proper_factor(const PrimeField& f, const Poly& a, std::mt19937_64& rng) {
  Poly r = radical(f, a);
  if (degree(r) <= 1) return {};
  // distinct-degree factorization
  Poly rem = r;
  Poly h = x_poly();
  for (int k = 1; 2 * k <= degree(rem); ++k) {
    h = powmod(f, h, f.p(), rem);
    Poly g = gcd(f, rem, sub(f, h, x_poly()));
    if (degree(g) > 0) {
      if (degree(g) < degree(r)) return g;
      // every factor has degree k
      if (degree(g) == k) return {};
      return equal_degree_factor(f, g, k, rng);
    }
  }
  return {};  // rem (= r) is irreducible
}

}  // namespace extri::poly
