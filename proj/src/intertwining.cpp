#include "gl2/intertwining.hpp"

#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <stdexcept>

namespace gl2 {

Rational intertwining_constant() { return Rational(-1); }

double completed_zeta(double s) {
  return std::pow(M_PI, -s / 2) * std::tgamma(s / 2) * boost::math::zeta(s);
}

IntertwiningCheck numeric_verify(double s) {
  if (!(s > 0 && s <= 0.5)) throw std::invalid_argument("numeric_verify needs 0 < s <= 1/2");
  IntertwiningCheck c;
  c.s = s;
  c.completed_ratio = completed_zeta(1 - s) / completed_zeta(1 + s);
  c.distance = std::abs(c.completed_ratio - intertwining_constant().get_d());
  c.uncompleted_ratio = boost::math::zeta(1 - s) / boost::math::zeta(1 + s);
  return c;
}

double uncompleted_ratio_at_one() { return boost::math::zeta(0.0) / boost::math::zeta(2.0); }

}  // namespace gl2
