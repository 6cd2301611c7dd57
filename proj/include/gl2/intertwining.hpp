#pragma once

#include "gl2/rational.hpp"

namespace gl2 {

/// Scalar of M(chi, chi) at the residual point for quadratic chi.
Rational intertwining_constant();

/// xi(s) = pi^{-s/2} Gamma(s/2) zeta(s).
double completed_zeta(double s);

struct IntertwiningCheck {
  double s = 0;
  double completed_ratio = 0;    // xi(1 - s) / xi(1 + s)
  double distance = 0;           // |completed_ratio - constant|
  double uncompleted_ratio = 0;  // zeta(1 - s) / zeta(1 + s)
};

/// Evaluates the completed ratio near s = 0; requires 0 < s <= 1/2.
IntertwiningCheck numeric_verify(double s);

/// zeta(0) / zeta(2) = -3 / pi^2: the uncompleted ratio at s = 1, which is not -1.
double uncompleted_ratio_at_one();

}  // namespace gl2
