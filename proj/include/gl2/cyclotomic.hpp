#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gl2/rational.hpp"

namespace gl2 {

/// Element of Q(zeta_N), kept as a polynomial in zeta of degree < N, i.e. in
/// Q[x]/(x^N - 1). Equality and rationality tests reduce modulo the N-th
/// cyclotomic polynomial, so different representatives of one number compare equal.
class Cyclotomic {
 public:
  Cyclotomic() : coeffs_(1) {}
  Cyclotomic(long n) : coeffs_{Rational(n)} {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(Rational r) : coeffs_{std::move(r)} {}  // NOLINT(google-explicit-constructor)

  /// c * zeta_N^k.
  static Cyclotomic root_of_unity(int N, long k, Rational c = 1);
  /// sum_k coeffs[k] zeta_N^k with N = coeffs.size().
  static Cyclotomic from_coefficients(std::vector<Rational> coeffs);
  /// a + b i.
  static Cyclotomic gaussian(Rational a, Rational b);
  /// Parses `a` or `a,b` (a + b i) with rational parts.
  static Cyclotomic parse(const std::string& text);

  int order() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Same number written over zeta_M, N | M.
  Cyclotomic lifted(int M) const;
  /// Canonical coefficients: remainder modulo Phi_N.
  std::vector<Rational> reduced() const;
  bool is_zero() const;
  bool is_rational() const;
  /// Value when rational; throws std::domain_error otherwise.
  Rational to_rational() const;
  std::complex<double> to_complex() const;
  Cyclotomic conj() const;

  /// x * zeta_N^k, N = order() lifted if needed.
  Cyclotomic times_root(int N, long k) const;

  std::string str() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic x, const Cyclotomic& y) { return x += y; }
  friend Cyclotomic operator-(Cyclotomic x, const Cyclotomic& y) { return x -= y; }
  friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y);
  friend bool operator==(const Cyclotomic& x, const Cyclotomic& y);
  friend bool operator!=(const Cyclotomic& x, const Cyclotomic& y) { return !(x == y); }

 private:
  explicit Cyclotomic(std::vector<Rational> c) : coeffs_(std::move(c)) {}
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z);

/// Integer coefficients of Phi_N, low degree first (cached).
const std::vector<long>& cyclotomic_polynomial(int N);

}  // namespace gl2
