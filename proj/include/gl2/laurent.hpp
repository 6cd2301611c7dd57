#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gl2/rational.hpp"

namespace gl2 {

/// Element of Q[v, v^-1] / (v^2 - q), kept in the reduced form a + b*v.
///
/// Half-integral powers of q show up in the Satake normalization; adjoining
/// v keeps every identity exact. A value with b == 0 is "unbound" (q == 0)
/// and combines with any q; two bound values must agree on q.
class LaurentQ {
 public:
  LaurentQ() = default;
  LaurentQ(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  LaurentQ(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  LaurentQ(Rational a, Rational b, std::int64_t q);

  /// v^k in the ring with v^2 = q.
  static LaurentQ v_power(std::int64_t q, int k);

  /// Sum of c_i * v^(k_min + i).
  static LaurentQ from_coefficients(std::int64_t q, int k_min, const std::vector<Rational>& coeffs);

  /// Parses terms like `3/2`, `-v`, `1/3*v^-1`, `2+5*v` (no spaces).
  static LaurentQ parse(std::string_view text, std::int64_t q);

  const Rational& rational_part() const { return a_; }
  const Rational& v_part() const { return b_; }
  std::int64_t q() const { return q_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  /// True when the value is a nonnegative combination of powers of v
  /// (both a >= 0 and b >= 0 in the reduced form).
  bool is_nonnegative() const { return a_ >= 0 && b_ >= 0; }

  /// Numeric value with v = +sqrt(q).
  double to_double() const;

  /// Multiplicative inverse; throws std::domain_error when a^2 - q b^2 == 0.
  LaurentQ inverse() const;

  /// `a`, `b*v` or `a+b*v`; parseable by parse().
  std::string str() const;

  LaurentQ& operator+=(const LaurentQ& o);
  LaurentQ& operator-=(const LaurentQ& o);
  LaurentQ& operator*=(const LaurentQ& o);
  LaurentQ& operator/=(const LaurentQ& o) { return *this *= o.inverse(); }

  friend LaurentQ operator+(LaurentQ x, const LaurentQ& y) { return x += y; }
  friend LaurentQ operator-(LaurentQ x, const LaurentQ& y) { return x -= y; }
  friend LaurentQ operator*(LaurentQ x, const LaurentQ& y) { return x *= y; }
  friend LaurentQ operator/(LaurentQ x, const LaurentQ& y) { return x /= y; }
  LaurentQ operator-() const;

  friend bool operator==(const LaurentQ& x, const LaurentQ& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const LaurentQ& x, const LaurentQ& y) { return !(x == y); }

 private:
  void merge_q(std::int64_t other);
  void normalize();

  Rational a_{0};
  Rational b_{0};
  std::int64_t q_ = 0;
};

std::ostream& operator<<(std::ostream& os, const LaurentQ& x);

LaurentQ pow(const LaurentQ& x, int k);

/// Exact complex number (re + i*im) with LaurentQ parts, i.e. Q(sqrt q, i).
class ExactComplex {
 public:
  ExactComplex() = default;
  ExactComplex(long n) : re_(n) {}  // NOLINT(google-explicit-constructor)
  ExactComplex(LaurentQ re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  ExactComplex(LaurentQ re, LaurentQ im) : re_(std::move(re)), im_(std::move(im)) {}

  /// Parses `re` or `re,im` with rational parts.
  static ExactComplex parse(std::string_view text);

  const LaurentQ& real() const { return re_; }
  const LaurentQ& imag() const { return im_; }

  ExactComplex conj() const { return {re_, -im_}; }
  LaurentQ norm() const { return re_ * re_ + im_ * im_; }
  ExactComplex inverse() const;
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  std::string str() const;

  ExactComplex& operator+=(const ExactComplex& o);
  ExactComplex& operator-=(const ExactComplex& o);
  ExactComplex& operator*=(const ExactComplex& o);
  ExactComplex& operator/=(const ExactComplex& o) { return *this *= o.inverse(); }

  friend ExactComplex operator+(ExactComplex x, const ExactComplex& y) { return x += y; }
  friend ExactComplex operator-(ExactComplex x, const ExactComplex& y) { return x -= y; }
  friend ExactComplex operator*(ExactComplex x, const ExactComplex& y) { return x *= y; }
  friend ExactComplex operator/(ExactComplex x, const ExactComplex& y) { return x /= y; }
  ExactComplex operator-() const { return {-re_, -im_}; }

  friend bool operator==(const ExactComplex& x, const ExactComplex& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }
  friend bool operator!=(const ExactComplex& x, const ExactComplex& y) { return !(x == y); }

 private:
  LaurentQ re_;
  LaurentQ im_;
};

std::ostream& operator<<(std::ostream& os, const ExactComplex& z);

ExactComplex pow(const ExactComplex& z, int k);

}  // namespace gl2
