#include "gl2/rational.hpp"

#include <stdexcept>

namespace gl2 {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto valid = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) return false;
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

int valuation(const Integer& z, std::int64_t p) {
  if (z == 0) return kInfiniteValuation;
  Integer rem = z;
  Integer prime(static_cast<long>(p));
  int v = 0;
  while (mpz_divisible_p(rem.get_mpz_t(), prime.get_mpz_t())) {
    rem /= prime;
    ++v;
  }
  return v;
}

int valuation(const Rational& r, std::int64_t p) {
  if (r == 0) return kInfiniteValuation;
  return valuation(r.get_num(), p) - valuation(r.get_den(), p);
}

Rational power(const Rational& r, int k) {
  if (k < 0) {
    if (r == 0) throw std::domain_error("negative power of zero");
    return power(Rational(1) / r, -k);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(k));
  return Rational(num, den);
}

Rational int_power(std::int64_t q, int k) { return power(Rational(static_cast<long>(q)), k); }

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t unit_residue(const Rational& r, std::int64_t p, std::int64_t m) {
  if (r == 0) throw std::domain_error("unit_residue of zero");
  Rational u = r * int_power(p, -valuation(r, p));
  Integer mod(static_cast<long>(m));
  Integer num = u.get_num() % mod;
  Integer den = u.get_den() % mod;
  if (num < 0) num += mod;
  if (den < 0) den += mod;
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw std::domain_error("denominator not invertible modulo residue modulus");
  }
  Integer res = (num * inv) % mod;
  return res.get_si();
}

}  // namespace gl2
