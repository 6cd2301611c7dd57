#pragma once

#include <optional>
#include <string>

#include "gl2/basic_functions.hpp"
#include "gl2/hecke.hpp"
#include "gl2/polynomial.hpp"

namespace gl2 {

/// Diagonal class diag(t1, t2) in GL2(Q_p), carried with explicit entries.
class SplitClass {
 public:
  /// Explicit entries; both nonzero.
  static SplitClass from_entries(LocalField field, Rational t1, Rational t2);
  /// Representative with val t1 = e1, val t2 = e2 and val(t1 - t2) = d.
  /// d defaults to min(e1, e2) when e1 != e2 and is required otherwise;
  /// pass kInfiniteValuation for the singular class t1 = t2.
  static SplitClass from_valuations(LocalField field, int e1, int e2, std::optional<int> d = std::nullopt);

  const LocalField& field() const { return field_; }
  const Rational& t1() const { return t1_; }
  const Rational& t2() const { return t2_; }
  int e1() const { return e1_; }
  int e2() const { return e2_; }
  /// val(t1 - t2); kInfiniteValuation when singular.
  int d() const { return d_; }
  bool is_regular() const { return d_ != kInfiniteValuation; }

  /// H = |t1 / t2|.
  LaurentQ H() const;
  /// |D|^{1/2} = |t1 - t2| / |t1 t2|^{1/2}; regular classes only.
  LaurentQ discriminant_sqrt() const;

  std::string str() const;

 private:
  SplitClass(LocalField field, Rational t1, Rational t2);
  LocalField field_;
  Rational t1_, t2_;
  int e1_ = 0, e2_ = 0, d_ = 0;
};

/// f_G(gamma) = |D|^{1/2} int_N h(n^-1 gamma n) dn, closed form by valuation casework.
LaurentQ split_orbital(const HeckeElement& h, const SplitClass& gamma);

struct TreeOracleResult {
  LaurentQ value;
  bool stabilized = false;
  int depth = 0;
  std::int64_t terms = 0;
};

/// Brute-force sum of h(n(x)^-1 gamma n(x)) over x in p^-depth O / O, times |D|^{1/2}.
TreeOracleResult tree_orbital_oracle(const HeckeElement& h, const SplitClass& gamma, int depth, int jobs = 1);

/// H(a) int_N h(a n) dn; a may be singular.
LaurentQ phi_transform(const HeckeElement& h, const SplitClass& a);

/// kappa with phi_transform(h, a) = H(a)^kappa f_G(a); nullopt when H(a) = 1,
/// f_G(a) = 0 or the ratio is not a power of H(a).
std::optional<Rational> measured_phi_exponent(const HeckeElement& h, const SplitClass& a);

/// k with x = v^k (v^2 = q), if x is a power of v.
std::optional<int> v_exponent(const LaurentQ& x, std::int64_t q);

/// sum_{n<=N} f_G(gamma, basic_coeff(r, n)) t^n.
Series<LaurentQ> orbital_zeta(const SplitClass& gamma, const RepSpec& r, int N);

struct Reconstruction {
  std::optional<RationalFunction<LaurentQ>> function;
  int fitted = 0;     // coefficients used for the fit
  int certified = 0;  // coefficients reproduced beyond the fit window
  std::string reason;  // empty on success
  bool ok() const { return function.has_value(); }
};

/// Exact Pade fit of num degree <= deg_num, den degree <= deg_den from the first
/// deg_num + deg_den + 1 coefficients, certified on the next `certify`
/// coefficients (default: as many again). Throws std::invalid_argument when
/// the series is too short.
Reconstruction rational_reconstruct(const Series<LaurentQ>& series, int deg_num, int deg_den, int certify = -1);

}  // namespace gl2
