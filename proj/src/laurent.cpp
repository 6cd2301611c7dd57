#include "gl2/laurent.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gl2 {

LaurentQ::LaurentQ(Rational a, Rational b, std::int64_t q) : a_(std::move(a)), b_(std::move(b)), q_(q) {
  if (q_ < 0 || q_ == 1) throw std::invalid_argument("LaurentQ: q must be >= 2");
  if (q_ == 0 && b_ != 0) throw std::invalid_argument("LaurentQ: v-part requires q");
  normalize();
}

LaurentQ LaurentQ::v_power(std::int64_t q, int k) {
  // v^(2m) = q^m, v^(2m+1) = q^m v
  int m = (k >= 0) ? k / 2 : -((-k + 1) / 2);
  bool odd = (k - 2 * m) == 1;
  Rational c = int_power(q, m);
  if (odd) return LaurentQ(Rational(0), c, q);
  return LaurentQ(c, Rational(0), q);
}

LaurentQ LaurentQ::from_coefficients(std::int64_t q, int k_min, const std::vector<Rational>& coeffs) {
  LaurentQ out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    out += LaurentQ(coeffs[i]) * v_power(q, k_min + static_cast<int>(i));
  }
  return out;
}

LaurentQ LaurentQ::parse(std::string_view text, std::int64_t q) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty coefficient literal");
  LaurentQ out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = pos + 1;
    while (next < s.size() && s[next] != '+' && !(s[next] == '-' && s[next - 1] != '^')) ++next;
    std::string term = s.substr(pos, next - pos);
    pos = next;
    int sign = 1;
    if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
      if (term[0] == '-') sign = -1;
      term.erase(0, 1);
    }
    if (term.empty()) throw std::invalid_argument("malformed coefficient '" + s + "'");
    Rational c(1);
    int k = 0;
    auto vpos = term.find('v');
    std::string coeff_text = vpos == std::string::npos ? term : term.substr(0, vpos);
    if (vpos != std::string::npos) {
      if (!coeff_text.empty()) {
        if (coeff_text.back() != '*') throw std::invalid_argument("malformed coefficient '" + s + "'");
        coeff_text.pop_back();
      }
      std::string exp_text = term.substr(vpos + 1);
      if (exp_text.empty()) {
        k = 1;
      } else {
        if (exp_text[0] != '^') throw std::invalid_argument("malformed coefficient '" + s + "'");
        try {
          std::size_t used = 0;
          k = std::stoi(exp_text.substr(1), &used);
          if (used != exp_text.size() - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw std::invalid_argument("malformed exponent in '" + s + "'");
        }
      }
    }
    if (!coeff_text.empty()) c = parse_rational(coeff_text);
    if (k != 0 && q == 0) throw std::invalid_argument("power of v needs q");
    out += LaurentQ(Rational(sign * c)) * (k == 0 ? LaurentQ(1) : v_power(q, k));
  }
  return out;
}

double LaurentQ::to_double() const {
  double v = q_ == 0 ? 0.0 : std::sqrt(static_cast<double>(q_));
  return a_.get_d() + b_.get_d() * v;
}

LaurentQ LaurentQ::inverse() const {
  // (a + b v)^-1 = (a - b v) / (a^2 - q b^2)
  Rational n = a_ * a_ - Rational(static_cast<long>(q_)) * b_ * b_;
  if (n == 0) throw std::domain_error("LaurentQ: element is not invertible");
  LaurentQ out;
  out.a_ = a_ / n;
  out.b_ = -b_ / n;
  out.q_ = q_;
  out.normalize();
  return out;
}

std::string LaurentQ::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

void LaurentQ::merge_q(std::int64_t other) {
  if (other == 0 || other == q_) return;
  if (q_ == 0) {
    q_ = other;
    return;
  }
  throw std::invalid_argument("LaurentQ: mismatched residue cardinalities");
}

void LaurentQ::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  if (b_ == 0) q_ = 0;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  merge_q(o.q_);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) {
  merge_q(o.q_);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& o) {
  merge_q(o.q_);
  Rational q(static_cast<long>(q_));
  Rational a = a_ * o.a_ + q * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  normalize();
  return *this;
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ out = *this;
  out.a_ = -a_;
  out.b_ = -b_;
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentQ& x) {
  const Rational& a = x.rational_part();
  const Rational& b = x.v_part();
  if (b == 0) return os << to_string(a);
  auto v_term = [&](const Rational& c) {
    if (c == 1) return std::string("v");
    if (c == -1) return std::string("-v");
    return to_string(c) + "*v";
  };
  if (a == 0) return os << v_term(b);
  os << to_string(a);
  if (b > 0) os << "+";
  return os << v_term(b);
}

LaurentQ pow(const LaurentQ& x, int k) {
  if (k < 0) return pow(x.inverse(), -k);
  LaurentQ result(1), base = x;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

ExactComplex ExactComplex::parse(std::string_view text) {
  std::string s(text);
  auto comma = s.find(',');
  if (comma == std::string::npos) return ExactComplex(LaurentQ(parse_rational(s)));
  return ExactComplex(LaurentQ(parse_rational(s.substr(0, comma))), LaurentQ(parse_rational(s.substr(comma + 1))));
}

ExactComplex ExactComplex::inverse() const {
  LaurentQ n = norm();
  if (n.is_zero()) throw std::domain_error("ExactComplex: division by zero");
  LaurentQ inv = n.inverse();
  return {re_ * inv, -im_ * inv};
}

std::string ExactComplex::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
  LaurentQ re = re_ * o.re_ - im_ * o.im_;
  LaurentQ im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactComplex& z) {
  if (z.imag().is_zero()) return os << z.real();
  return os << "(" << z.real() << ")+i*(" << z.imag() << ")";
}

ExactComplex pow(const ExactComplex& z, int k) {
  if (k < 0) return pow(z.inverse(), -k);
  ExactComplex result(1), base = z;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

}  // namespace gl2
