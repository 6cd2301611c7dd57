#pragma once

// Shared helpers for the test executables: random Hecke elements and a
// brute-force coset convolution used as an oracle.

#include <random>

#include "gl2/hecke.hpp"

namespace gl2::testing {

inline Rational random_rational(std::mt19937_64& rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  return Rational(num(rng), den(rng));
}

inline LaurentQ random_coefficient(std::mt19937_64& rng, std::int64_t q) {
  return LaurentQ(random_rational(rng), random_rational(rng), q);
}

/// Random element with keys a >= b in [lo, hi], span <= max_span.
inline HeckeElement random_hecke(std::mt19937_64& rng, LocalField field, int lo = -1, int hi = 3, int max_span = 3,
                                 int max_terms = 3) {
  HeckeElement h(field);
  std::uniform_int_distribution<int> key(lo, hi), terms(1, max_terms);
  int n = terms(rng);
  for (int k = 0; k < n; ++k) {
    int a = key(rng), b = key(rng);
    if (a < b) std::swap(a, b);
    if (a - b > max_span) b = a - max_span;
    h.add_term(Cocharacter(a, b), random_coefficient(rng, field.q()));
  }
  return h;
}

/// Valuation of a rational matrix entry.
inline int entry_valuation(const Rational& x, std::int64_t p) { return valuation(x, p); }

/// (f * g)(diag(p^c, p^d)) summed over the explicit coset list of supp f.
inline LaurentQ explicit_convolution_value(const HeckeElement& f, const HeckeElement& g, int c, int d) {
  const std::int64_t p = f.q();
  LaurentQ acc;
  for (const auto& [mu, cf] : f.terms()) {
    for (const auto& rep : coset_decomposition(f.field(), mu)) {
      // y^-1 x with y = [[p^i, u], [0, p^j]], x = diag(p^c, p^d)
      Rational a = int_power(p, c - rep.i);
      Rational b = -rep.u * int_power(p, d - rep.i - rep.j);
      Rational dd = int_power(p, d - rep.j);
      Cocharacter lambda = elementary_divisors(entry_valuation(a, p), entry_valuation(b, p), kInfiniteValuation,
                                               entry_valuation(dd, p), valuation(a * dd, p));
      acc += cf * g.coefficient(lambda);
    }
  }
  return acc;
}

}  // namespace gl2::testing
