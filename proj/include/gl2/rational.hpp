#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gl2 {

using Rational = mpq_class;
using Integer = mpz_class;

/// Sentinel valuation of zero.
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/// Parses `n`, `-n` or `n/d`. Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

/// `n` when the denominator is 1, otherwise `n/d`.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// p-adic valuation of a nonzero integer; kInfiniteValuation for zero.
int valuation(const Integer& z, std::int64_t p);
int valuation(const Rational& r, std::int64_t p);

/// r^k for any integer k (r nonzero when k < 0).
Rational power(const Rational& r, int k);

/// q^k as an exact rational, k may be negative.
Rational int_power(std::int64_t q, int k);

bool is_prime(std::int64_t n);

/// Unit part r / p^{v_p(r)} reduced modulo m (m coprime to p); r must be nonzero.
std::int64_t unit_residue(const Rational& r, std::int64_t p, std::int64_t m);

}  // namespace gl2
