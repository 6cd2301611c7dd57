#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "gl2/hecke.hpp"
#include "gl2/polynomial.hpp"

namespace gl2 {

/// Finite-dimensional representation of GL2(C), recorded by its weights:
/// r(diag(Y1, Y2)) has eigenvalues Y1^i Y2^j for each (i, j) listed.
struct RepSpec {
  std::vector<Monomial> weights;
  std::string label;

  /// Sym^k(std) (x) det^m.
  static RepSpec sym(int k, int m = 0);
  static RepSpec trivial() { return sym(0, 0); }
  static RepSpec standard() { return sym(1, 0); }
  /// Weights of r (x) s.
  static RepSpec tensor(const RepSpec& r, const RepSpec& s);
  static RepSpec dual(const RepSpec& r);
  /// std (x) std^dual; its trace at c is |tr std(c)|^2 on the unitary locus.
  static RepSpec adjoint_proxy() { return tensor(standard(), dual(standard())); }

  /// `trivial`, `std`, `std*det^m`, `symK`, `symK*det^m`, `det^m`, `proxy`.
  static RepSpec parse(const std::string& text);

  int dimension() const { return static_cast<int>(weights.size()); }
  /// Sum of i + j over a weight (all weights share it for the reps built here).
  int determinant_degree() const;
};

std::vector<Monomial> rep_weights(const RepSpec& r);

/// tr(g, Sym^n r) = h_n(weights of r).
SymLaurent symn_trace(const RepSpec& r, int n);

/// n-th homogeneous piece f^{r,n} of the basic function: inverse Satake of symn_trace.
HeckeElement basic_coeff(const RepSpec& r, int n, const LocalField& field);

/// Characteristic function of {g in Mat2(O) : val det g = n}.
HeckeElement mat2_characteristic(const LocalField& field, int n);

/// det(1 - r(c) t)^-1 as an exact rational function in t.
RationalFunction<ExactComplex> local_l_factor(const RepSpec& r, const ExactComplex& alpha, const ExactComplex& beta);
RationalFunction<std::complex<double>> local_l_factor(const RepSpec& r, std::complex<double> alpha,
                                                      std::complex<double> beta);

/// (sum_{n<=N} tr pi_c(f^{r,n}) t^n, expansion of L(t) to order N).
std::pair<Series<ExactComplex>, Series<ExactComplex>> truncated_basic_identity(const RepSpec& r,
                                                                               const ExactComplex& alpha,
                                                                               const ExactComplex& beta, int N,
                                                                               const LocalField& field);

}  // namespace gl2
