#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "extri/matrix.hpp"

namespace extri {

/// Dense univariate polynomial over F_p, coefficients from degree 0 upward.
/// The zero polynomial is the empty vector.
using Poly = std::vector<Scalar>;

namespace poly {

int degree(const Poly& a);
void trim(Poly& a);
Poly monic(const PrimeField& f, Poly a);
Poly sub(const PrimeField& f, const Poly& a, const Poly& b);
Poly mul(const PrimeField& f, const Poly& a, const Poly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const PrimeField& f, const Poly& a, const Poly& b);
Poly mod(const PrimeField& f, const Poly& a, const Poly& b);
Poly gcd(const PrimeField& f, Poly a, Poly b);
Poly powmod(const PrimeField& f, Poly base, std::uint64_t e, const Poly& m);

/// Product of the distinct monic irreducible factors of a nonzero a.
Poly radical(const PrimeField& f, const Poly& a);
/// Ben-Or irreducibility test.
bool is_irreducible(const PrimeField& f, const Poly& a);
/// A monic factor g of the radical of a with 0 < deg g < deg rad(a), or the
/// empty polynomial when rad(a) is irreducible.
Poly proper_factor(const PrimeField& f, const Poly& a, std::mt19937_64& rng);

/// Minimal polynomial of the sequence of vectors powers(k) = A^k v for an
/// operator given implicitly: `next` maps the flattened A^k to A^{k+1}.
/// Works on any finite-dimensional operator presented this way.
template <class Next>
Poly minimal_polynomial(std::uint32_t p, std::vector<Scalar> start, Next next) {
  PrimeField f(p);
  std::size_t len = start.size();
  bool zero = true;
  for (Scalar x : start) zero = zero && x == 0;
  if (zero) return Poly{1};
  std::vector<std::vector<Scalar>> powers{start};
  SpanBuilder span(p, len);
  span.add(start);
  while (true) {
    std::vector<Scalar> v = next(powers.back());
    if (span.contains(v)) {
      Matrix basis(p, len, powers.size());
      for (std::size_t k = 0; k < powers.size(); ++k)
        for (std::size_t i = 0; i < len; ++i) basis(i, k) = powers[k][i];
      Matrix target(p, len, 1);
      for (std::size_t i = 0; i < len; ++i) target(i, 0) = v[i];
      Matrix c = coordinates(basis, target);
      Poly m(powers.size() + 1);
      for (std::size_t k = 0; k < powers.size(); ++k) m[k] = f.neg(c(k, 0));
      m.back() = 1;
      return m;
    }
    span.add(v);
    powers.push_back(std::move(v));
  }
}

}  // namespace poly
}  // namespace extri
