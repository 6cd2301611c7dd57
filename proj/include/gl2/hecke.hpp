#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gl2/laurent.hpp"
#include "gl2/rational.hpp"

namespace gl2 {

/// Nonarchimedean local field Q_p, identified by its residue cardinality q = p.
/// Measures are normalized with vol(GL2(O)) = 1 and vol(O) = 1.
class LocalField {
 public:
  explicit LocalField(std::int64_t q);
  std::int64_t q() const { return q_; }
  friend bool operator==(const LocalField& a, const LocalField& b) { return a.q_ == b.q_; }
  friend bool operator!=(const LocalField& a, const LocalField& b) { return a.q_ != b.q_; }

 private:
  std::int64_t q_;
};

/// Dominant cocharacter (a, b), a >= b: labels K diag(p^a, p^b) K.
struct Cocharacter {
  int a = 0;
  int b = 0;
  Cocharacter() = default;
  Cocharacter(int a_, int b_);
  int det_valuation() const { return a + b; }
  int span() const { return a - b; }
  friend auto operator<=>(const Cocharacter&, const Cocharacter&) = default;
};

/// Dominant representative of the double coset containing diag(p^i, p^j).
inline Cocharacter dominant(int i, int j) { return i >= j ? Cocharacter(i, j) : Cocharacter(j, i); }

/// Finitely supported bi-K-invariant function, stored by double-coset coefficients.
class HeckeElement {
 public:
  explicit HeckeElement(LocalField field) : field_(field) {}

  /// Characteristic function of K diag(p^a, p^b) K.
  static HeckeElement basis(LocalField field, int a, int b);
  /// char_K, the unit of the algebra.
  static HeckeElement unit(LocalField field) { return basis(field, 0, 0); }
  /// T_p = char of K diag(p, 1) K.
  static HeckeElement hecke_operator(LocalField field) { return basis(field, 1, 0); }

  const LocalField& field() const { return field_; }
  std::int64_t q() const { return field_.q(); }
  const std::map<Cocharacter, LaurentQ>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of the double coset (a, b); zero off the support.
  LaurentQ coefficient(const Cocharacter& mu) const;
  /// Value at diag(p^i, p^j) (any order).
  LaurentQ value_at_diagonal(int i, int j) const { return coefficient(dominant(i, j)); }

  void add_term(const Cocharacter& mu, const LaurentQ& c);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement x, const HeckeElement& y) { return x += y; }
  friend HeckeElement operator-(HeckeElement x, const HeckeElement& y) { return x -= y; }
  friend HeckeElement operator*(const LaurentQ& c, const HeckeElement& h);
  friend bool operator==(const HeckeElement& x, const HeckeElement& y) {
    return x.field_ == y.field_ && x.terms_ == y.terms_;
  }
  friend bool operator!=(const HeckeElement& x, const HeckeElement& y) { return !(x == y); }

 private:
  LocalField field_;
  std::map<Cocharacter, LaurentQ> terms_;
};

/// Monomial Y1^i Y2^j.
using Monomial = std::pair<int, int>;

/// Symmetric Laurent polynomial in Y1, Y2 with LaurentQ coefficients.
/// Both (i, j) and (j, i) are stored; construction rejects asymmetric input.
class SymLaurent {
 public:
  SymLaurent() = default;
  explicit SymLaurent(std::map<Monomial, LaurentQ> terms);

  /// Coefficient c on the orbit {Y1^i Y2^j, Y1^j Y2^i}.
  static SymLaurent orbit(int i, int j, const LaurentQ& c);
  static SymLaurent constant(const LaurentQ& c) { return orbit(0, 0, c); }

  const std::map<Monomial, LaurentQ>& terms() const { return terms_; }
  LaurentQ coefficient(int i, int j) const;
  bool is_zero() const { return terms_.empty(); }

  SymLaurent& operator+=(const SymLaurent& o);
  SymLaurent& operator-=(const SymLaurent& o);
  friend SymLaurent operator+(SymLaurent x, const SymLaurent& y) { return x += y; }
  friend SymLaurent operator-(SymLaurent x, const SymLaurent& y) { return x -= y; }
  friend SymLaurent operator*(const SymLaurent& x, const SymLaurent& y);
  friend SymLaurent operator*(const LaurentQ& c, const SymLaurent& p);
  friend bool operator==(const SymLaurent& x, const SymLaurent& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const SymLaurent& x, const SymLaurent& y) { return !(x == y); }

  /// Evaluates with Y1 = y1, Y2 = y2 (exactly, inside the ring).
  LaurentQ evaluate(const LaurentQ& y1, const LaurentQ& y2) const;
  ExactComplex evaluate(const ExactComplex& y1, const ExactComplex& y2) const;
  /// Numeric evaluation with v = +sqrt(q).
  std::complex<double> evaluate(std::complex<double> y1, std::complex<double> y2) const;

  /// Human-readable form, e.g. `v*Y1 + v*Y2`.
  std::string str() const;

 private:
  std::map<Monomial, LaurentQ> terms_;
};

/// Satake parameter diag(alpha, beta): exact (Q(sqrt q, i)) or double precision.
struct SatakeParameter {
  struct Exact {
    ExactComplex alpha, beta;
  };
  struct Numeric {
    std::complex<double> alpha, beta;
  };
  std::variant<Exact, Numeric> value;

  static SatakeParameter exact(ExactComplex a, ExactComplex b) { return {Exact{std::move(a), std::move(b)}}; }
  static SatakeParameter numeric(std::complex<double> a, std::complex<double> b) { return {Numeric{a, b}}; }

  bool is_exact() const { return std::holds_alternative<Exact>(value); }
  std::complex<double> alpha_numeric() const;
  std::complex<double> beta_numeric() const;
  /// |alpha| == |beta| == 1 (exactly for exact parameters, within tol otherwise).
  bool is_unitary(double tol = 1e-10) const;
};

/// Upper-triangular representative [[p^i, u], [0, p^j]] of a left coset gK.
struct CosetRep {
  int i = 0;
  int j = 0;
  Rational u;
};

/// Coset classes grouped by (i, j, val(u)) with their multiplicity.
struct CosetClass {
  int i = 0;
  int j = 0;
  int u_valuation = kInfiniteValuation;
  Integer count;
};

/// Canonical coset representatives of K diag(p^a, p^b) K / K, ordered by
/// (i, residue). u runs over p^b * m, 0 <= m < p^(i-b), subject to
/// min(i, j, val u) = b.
std::vector<CosetRep> coset_decomposition(const LocalField& field, const Cocharacter& mu);

/// The same decomposition grouped by (i, j, val u), without listing residues.
std::vector<CosetClass> coset_classes(const LocalField& field, const Cocharacter& mu);

/// Number of cosets, i.e. vol(K mu K) with vol(K) = 1.
Integer coset_count(const LocalField& field, const Cocharacter& mu);

/// Dominant cocharacter of the double coset containing a 2x2 matrix given by
/// the valuations of its entries and of its determinant.
Cocharacter elementary_divisors(int val_a, int val_b, int val_c, int val_d, int val_det);

HeckeElement convolve(const HeckeElement& f, const HeckeElement& g);
SymLaurent satake_transform(const HeckeElement& h);
HeckeElement inverse_satake(const SymLaurent& p, const LocalField& field);

ExactComplex spherical_trace(const HeckeElement& h, const ExactComplex& alpha, const ExactComplex& beta);
std::complex<double> spherical_trace(const HeckeElement& h, const SatakeParameter& c);

/// Text format:
///   q <q> kmin <k>
///   <a> <b> <c0> <c1> ...     (coefficient sum c_i v^(kmin+i))
void write_hecke(std::ostream& os, const HeckeElement& h);
HeckeElement read_hecke(std::istream& is);
/// Same layout keyed by monomial exponents i >= j.
void write_sym_laurent(std::ostream& os, const SymLaurent& p, std::int64_t q);
SymLaurent read_sym_laurent(std::istream& is, std::int64_t* q_out = nullptr);

std::string to_string(const HeckeElement& h);

}  // namespace gl2
