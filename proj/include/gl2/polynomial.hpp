#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gl2/laurent.hpp"

namespace gl2 {

/// Dense univariate polynomial in t over a coefficient ring C.
/// C must be constructible from long and support +, -, *, ==.
template <class C>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(C c) { return Polynomial(std::vector<C>{std::move(c)}); }
  /// c * t^k
  static Polynomial monomial(C c, int k) {
    std::vector<C> v(static_cast<std::size_t>(k) + 1, C(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<C>& coefficients() const { return coeffs_; }
  C coeff(int k) const {
    if (k < 0 || k > degree()) return C(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }
  const C& leading() const { return coeffs_.back(); }

  C evaluate(const C& x) const {
    C acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// First `count` coefficients (zero padded).
  std::vector<C> head(int count) const {
    std::vector<C> out(static_cast<std::size_t>(std::max(count, 0)), C(0));
    for (int k = 0; k < count && k <= degree(); ++k) out[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
  friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<C> out(x.coeffs_.size() + y.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i] == C(0)) continue;
      for (std::size_t j = 0; j < y.coeffs_.size(); ++j) out[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const C& c, const Polynomial& p) {
    std::vector<C> out = p.coeffs_;
    for (auto& x : out) x = c * x;
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& x, const Polynomial& y) { return x.coeffs_ == y.coeffs_; }
  friend bool operator!=(const Polynomial& x, const Polynomial& y) { return !(x == y); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == C(0)) coeffs_.pop_back();
  }
  std::vector<C> coeffs_;
};

/// Quotient and remainder over a field (C must support division).
template <class C>
std::pair<Polynomial<C>, Polynomial<C>> divmod(const Polynomial<C>& num, const Polynomial<C>& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<C> rem = num.coefficients();
  int dn = den.degree();
  int qdeg = num.degree() - dn;
  if (qdeg < 0) return {Polynomial<C>{}, num};
  std::vector<C> quot(static_cast<std::size_t>(qdeg) + 1, C(0));
  C lead_inv = C(1) / den.leading();
  for (int k = qdeg; k >= 0; --k) {
    C c = rem[static_cast<std::size_t>(k + dn)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = c;
    if (c == C(0)) continue;
    for (int i = 0; i <= dn; ++i) rem[static_cast<std::size_t>(k + i)] -= c * den.coefficients()[static_cast<std::size_t>(i)];
  }
  return {Polynomial<C>(std::move(quot)), Polynomial<C>(std::move(rem))};
}

/// Monic greatest common divisor over a field.
template <class C>
Polynomial<C> gcd(Polynomial<C> a, Polynomial<C> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (C(1) / a.leading()) * a;
}

/// Truncated power series c_0 + c_1 t + ... + c_N t^N (order N).
template <class C>
class Series {
 public:
  Series() = default;
  Series(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {  // NOLINT(google-explicit-constructor)
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  }
  static Series zero(int order) { return Series(std::vector<C>(static_cast<std::size_t>(order) + 1, C(0))); }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<C>& coefficients() const { return coeffs_; }
  const C& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  C& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

  Series truncated(int order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return Series(std::vector<C>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend bool operator==(const Series& x, const Series& y) { return x.coeffs_ == y.coeffs_; }
  friend bool operator!=(const Series& x, const Series& y) { return !(x == y); }

 private:
  std::vector<C> coeffs_{C(0)};
};

/// num / den with den(0) == 1.
template <class C>
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial<C>::constant(C(1))) {}
  RationalFunction(Polynomial<C> num, Polynomial<C> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    if (den_.coeff(0) == C(0)) throw std::invalid_argument("denominator must have nonzero constant term");
    if (den_.coeff(0) != C(1)) {
      C inv = C(1) / den_.coeff(0);
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  const Polynomial<C>& numerator() const { return num_; }
  const Polynomial<C>& denominator() const { return den_; }

  /// Power series expansion through t^order.
  Series<C> expand(int order) const {
    std::vector<C> s(static_cast<std::size_t>(order) + 1, C(0));
    for (int k = 0; k <= order; ++k) {
      C acc = num_.coeff(k);
      for (int i = 1; i <= std::min(k, den_.degree()); ++i) acc -= den_.coeff(i) * s[static_cast<std::size_t>(k - i)];
      s[static_cast<std::size_t>(k)] = acc;
    }
    return Series<C>(std::move(s));
  }

  C evaluate(const C& t) const { return num_.evaluate(t) / den_.evaluate(t); }

  /// Cancels the common factor of numerator and denominator (field coefficients).
  RationalFunction reduced() const {
    if (num_.is_zero()) return RationalFunction();
    auto g = gcd(num_, den_);
    return RationalFunction(divmod(num_, g).first, divmod(den_, g).first);
  }

  friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

 private:
  Polynomial<C> num_;
  Polynomial<C> den_;
};

/// `exponent:coefficient` pairs separated by spaces; `0` for the zero polynomial.
template <class C>
std::string format_terms(const std::vector<C>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == C(0)) continue;
    if (!first) os << ' ';
    os << k << ':' << coeffs[k];
    first = false;
  }
  if (first) os << "0:0";
  return os.str();
}

template <class C>
std::string format_polynomial(const Polynomial<C>& p) {
  return format_terms(p.coefficients());
}

/// Text form:
///   num: <terms>
///   den: <terms>
template <class C>
void write_rational_function(std::ostream& os, const RationalFunction<C>& f) {
  os << "num: " << format_polynomial(f.numerator()) << '\n';
  os << "den: " << format_polynomial(f.denominator()) << '\n';
}

/// Text form:
///   order: N
///   series: <terms>
template <class C>
void write_series(std::ostream& os, const Series<C>& s) {
  os << "order: " << s.order() << '\n';
  os << "series: " << format_terms(s.coefficients()) << '\n';
}

/// Parses `exponent:coefficient` pairs with LaurentQ coefficients.
Polynomial<LaurentQ> parse_polynomial(const std::string& terms, std::int64_t q);
RationalFunction<LaurentQ> read_rational_function(std::istream& is, std::int64_t q);
Series<LaurentQ> read_series(std::istream& is, std::int64_t q);

}  // namespace gl2
