#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "gl2/hecke.hpp"
#include "gl2/poisson.hpp"
#include "gl2/rational.hpp"

namespace gl2 {

/// Continuous piecewise-linear profile in x = log|t|: value y_i at breakpoint
/// x_i, linear in between, zero outside [x_0, x_n].
class PiecewiseLinear {
 public:
  PiecewiseLinear() = default;
  PiecewiseLinear(std::vector<Rational> x, std::vector<Rational> y);
  /// Parses `x0:y0 x1:y1 ...` (commas also separate pairs); empty text is the zero profile.
  static PiecewiseLinear parse(const std::string& text);

  const std::vector<Rational>& breakpoints() const { return x_; }
  const std::vector<Rational>& values() const { return y_; }
  bool is_zero() const;
  Rational operator()(const Rational& x) const;
  /// Exact integral over R (the d^x t mass of the corresponding half-line).
  Rational mass() const;
  PiecewiseLinear scaled(const Rational& c) const;
  std::string str() const;

 private:
  std::vector<Rational> x_;
  std::vector<Rational> y_;
};

/// Radial archimedean data on the split torus, one profile per sign of t for
/// f itself and for Phi. Global sums see the profiles only through their
/// averages over R_{>0}, i.e. through the masses.
struct ArchimedeanFactor {
  PiecewiseLinear f_pos, f_neg, phi_pos, phi_neg;

  Rational f_mass(int sign) const { return (sign > 0 ? f_pos : f_neg).mass(); }
  Rational phi_mass(int sign) const { return (sign > 0 ? phi_pos : phi_neg).mass(); }
  /// Same profile for both signs and for f and Phi.
  static ArchimedeanFactor even(const PiecewiseLinear& profile);
  /// The bump 1 - |x| on [-1, 1] on both sides (mass 1 for each sign).
  static ArchimedeanFactor bump();
};

/// One factorizable summand: Hecke elements at the finite places of S
/// (char_K where absent) times an archimedean factor.
struct FactorizableTerm {
  std::map<Place, HeckeElement> local;
  ArchimedeanFactor arch;
};

/// Finite sum of factorizable spherical test functions at level S.
/// Local coefficients must be rational: different places have different v.
class GlobalTestFunction {
 public:
  explicit GlobalTestFunction(std::vector<Place> S);
  GlobalTestFunction(std::vector<Place> S, FactorizableTerm term);

  const std::vector<Place>& places() const { return places_; }
  const std::vector<FactorizableTerm>& terms() const { return terms_; }
  void add_term(FactorizableTerm term);
  /// Local factor at p, char_K when the term does not mention p.
  HeckeElement local(const FactorizableTerm& t, Place p) const;

  friend GlobalTestFunction operator+(const GlobalTestFunction& f, const GlobalTestFunction& g);
  GlobalTestFunction scaled(const Rational& c) const;

 private:
  std::vector<Place> places_;
  std::vector<FactorizableTerm> terms_;
};

struct NormalizationConstants {
  Rational vol_k = 1;
  Rational vol_gbar = 1;
};

// --- local building blocks on PGL(2) ------------------------------------

/// f(diag(p^e, 1)) for the image of h in PGL(2): sum over central translates.
Rational pgl_torus_value(const HeckeElement& h, int e);
/// Phi(diag(p^e, 1)) = H(a) int_N f(a n) dn for the image of h in PGL(2).
Rational pgl_phi_value(const HeckeElement& h, int e);
/// Range of e where pgl_torus_value or pgl_phi_value can be nonzero.
std::vector<int> pgl_torus_range(const HeckeElement& h);

/// Square classes of O_p^x: representatives with their volume (vol O_p^x = 1).
std::vector<std::pair<Rational, Rational>> unit_square_classes(Place p);
/// int_{O_p^x} chi_d(p^e u) du, chi_d the local quadratic character (d, .)_p.
Rational unit_average(const Integer& d, Place p, int e);

// --- global terms ---------------------------------------------------------

struct TorusPoint {
  Rational t;
  Rational f_value;    // f(diag(t,1)), archimedean factor through its mass
  Rational phi_value;  // Phi(diag(t,1)), likewise
};

/// S-units t = +-prod p^e with f or Phi nonzero at diag(t, 1), sorted by t.
std::vector<TorusPoint> torus_support(const GlobalTestFunction& f);

struct CharacterRow {
  int term = 0;
  Integer d;
  Rational archimedean;
  std::vector<Rational> local;  // one entry per finite place of S, in order
  Rational product;
};

struct SpectralReport {
  std::vector<CharacterRow> rows;
  Rational total;
};

/// (1/vol_gbar) sum_{chi in D_S^*} prod_v int f_v chi_v(det), via coset volumes.
SpectralReport one_dim_spectral(const GlobalTestFunction& f, const NormalizationConstants& c = {});
/// (vol_k^2/vol_gbar) sum_{t in torus support} f(diag(t,1)).
Rational one_dim_geometric(const GlobalTestFunction& f, const NormalizationConstants& c = {});

struct CartanRow {
  int term = 0;
  Place place;
  Cocharacter coset;
  Rational coefficient;
  Integer group_volume;  // coset count, vol(K) = 1
  int torus_points;      // Weyl orbit of the coset in M(F_p)/M(O_p)
  Rational ratio;        // group_volume / torus_points
};

/// Trivial-character integral at one place: over PGL(2) and in the torus form.
struct CartanTotal {
  int term = 0;
  Place place;
  Rational group_integral;
  Rational torus_form;
};

struct CartanReport {
  std::vector<CartanRow> rows;
  std::vector<CartanTotal> totals;
};

CartanReport cartan_discrepancy(const GlobalTestFunction& f);

/// -1/4 sum_{chi in D_S^*} tr pi_(chi,chi)(f), each trace a torus integral of Phi.
SpectralReport residual_spectral(const GlobalTestFunction& f);
/// -1/4 sum_{t in torus support} Phi(diag(t,1)).
Rational residual_geometric(const GlobalTestFunction& f);

/// Push-forward of Phi to D_S: its Fourier coefficient at psi_d is the d-term of
/// residual_spectral before the factor -1/4, and poisson_check at the trivial
/// subgroup recovers the geometric sum.
GroupFunction residual_class_function(const GlobalTestFunction& f, const ClassGroup& D);

struct CorrectionRow {
  Rational t;
  Rational one_dim;   // vol_k^2/vol_gbar f(gamma)
  Rational residual;  // -1/4 Phi(gamma)
  Rational total;
};

struct CorrectionReport {
  std::vector<CorrectionRow> rows;
  Rational total;
};

/// Sum over gamma of (vol_k^2/vol_gbar f(gamma) - 1/4 Phi(gamma)), itemized.
CorrectionReport correction_term(const GlobalTestFunction& f, const NormalizationConstants& c = {});

// --- configuration ---------------------------------------------------------

struct GlobalConfig {
  GlobalTestFunction function{std::vector<Place>{kInfinity}};
  NormalizationConstants constants;
};

/// Line-based `key = value`:
///   places = inf,2,3
///   vol_gbar = 1            vol_k = 1
///   hecke.2 = T2.hecke      (path relative to base_dir, or `unit`, `T`, `a,b` for a basis element)
///   arch_f = -1:0 0:1 1:0   arch_f_neg, arch_phi, arch_phi_neg default to arch_f
/// Unknown keys are rejected.
GlobalConfig parse_global_config(std::istream& is, const std::string& base_dir = ".");

}  // namespace gl2
