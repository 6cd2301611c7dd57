#include "gl2/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gl2 {

namespace {

std::mutex phi_mutex;
std::map<int, std::vector<long>> phi_cache;

std::vector<long> compute_phi(int N) {
  // x^N - 1 divided by Phi_d for every proper divisor d of N
  std::vector<long> num(static_cast<std::size_t>(N) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(N)] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d) continue;
    const auto& den = cyclotomic_polynomial(d);
    const int dn = static_cast<int>(den.size()) - 1;
    const int nn = static_cast<int>(num.size()) - 1;
    std::vector<long> quot(static_cast<std::size_t>(nn - dn) + 1, 0);
    for (int k = nn - dn; k >= 0; --k) {
      long c = num[static_cast<std::size_t>(k + dn)];
      quot[static_cast<std::size_t>(k)] = c;
      if (c == 0) continue;
      for (int i = 0; i <= dn; ++i) num[static_cast<std::size_t>(k + i)] -= c * den[static_cast<std::size_t>(i)];
    }
    num = std::move(quot);
  }
  return num;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int N) {
  if (N < 1) throw std::invalid_argument("cyclotomic polynomial order must be >= 1");
  {
    std::lock_guard<std::mutex> lock(phi_mutex);
    auto it = phi_cache.find(N);
    if (it != phi_cache.end()) return it->second;
  }
  auto phi = compute_phi(N);
  std::lock_guard<std::mutex> lock(phi_mutex);
  return phi_cache.emplace(N, std::move(phi)).first->second;
}

Cyclotomic Cyclotomic::root_of_unity(int N, long k, Rational c) {
  if (N < 1) throw std::invalid_argument("root of unity order must be >= 1");
  std::vector<Rational> v(static_cast<std::size_t>(N));
  long e = ((k % N) + N) % N;
  v[static_cast<std::size_t>(e)] = std::move(c);
  return Cyclotomic(std::move(v));
}

Cyclotomic Cyclotomic::from_coefficients(std::vector<Rational> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("cyclotomic value needs at least one coefficient");
  return Cyclotomic(std::move(coeffs));
}

Cyclotomic Cyclotomic::gaussian(Rational a, Rational b) {
  if (b == 0) return Cyclotomic(std::move(a));
  std::vector<Rational> v(4);
  v[0] = std::move(a);
  v[1] = std::move(b);
  return Cyclotomic(std::move(v));
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) return Cyclotomic(parse_rational(text));
  return gaussian(parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1)));
}

Cyclotomic Cyclotomic::lifted(int M) const {
  const int N = order();
  if (M == N) return *this;
  if (M % N) throw std::invalid_argument("cannot lift to an order not divisible by the current one");
  std::vector<Rational> v(static_cast<std::size_t>(M));
  const int step = M / N;
  for (int k = 0; k < N; ++k) v[static_cast<std::size_t>(k * step)] = coeffs_[static_cast<std::size_t>(k)];
  return Cyclotomic(std::move(v));
}

std::vector<Rational> Cyclotomic::reduced() const {
  const int N = order();
  const auto& phi = cyclotomic_polynomial(N);
  const int deg = static_cast<int>(phi.size()) - 1;
  std::vector<Rational> r = coeffs_;
  for (int k = N - 1; k >= deg; --k) {
    Rational c = r[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    for (int i = 0; i <= deg; ++i) {
      if (phi[static_cast<std::size_t>(i)] != 0) r[static_cast<std::size_t>(k - deg + i)] -= c * phi[static_cast<std::size_t>(i)];
    }
  }
  r.resize(static_cast<std::size_t>(deg));
  return r;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : reduced())
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  auto r = reduced();
  for (std::size_t k = 1; k < r.size(); ++k)
    if (r[k] != 0) return false;
  return true;
}

Rational Cyclotomic::to_rational() const {
  auto r = reduced();
  for (std::size_t k = 1; k < r.size(); ++k)
    if (r[k] != 0) throw std::domain_error("cyclotomic value is not rational");
  return r.empty() ? Rational(0) : r[0];
}

std::complex<double> Cyclotomic::to_complex() const {
  const int N = order();
  std::complex<double> acc = 0;
  for (int k = 0; k < N; ++k) {
    if (coeffs_[static_cast<std::size_t>(k)] == 0) continue;
    acc += coeffs_[static_cast<std::size_t>(k)].get_d() * std::polar(1.0, 2 * M_PI * k / N);
  }
  return acc;
}

Cyclotomic Cyclotomic::conj() const {
  const int N = order();
  std::vector<Rational> v(static_cast<std::size_t>(N));
  for (int k = 0; k < N; ++k) v[static_cast<std::size_t>((N - k) % N)] = coeffs_[static_cast<std::size_t>(k)];
  return Cyclotomic(std::move(v));
}

Cyclotomic Cyclotomic::times_root(int N, long k) const {
  const int M = std::lcm(N, order());
  Cyclotomic x = lifted(M);
  const long shift = (((k % N) + N) % N) * (M / N);
  std::vector<Rational> v(static_cast<std::size_t>(M));
  for (int e = 0; e < M; ++e) v[static_cast<std::size_t>((e + shift) % M)] = x.coeffs_[static_cast<std::size_t>(e)];
  return Cyclotomic(std::move(v));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const int M = std::lcm(order(), o.order());
  if (M != order()) *this = lifted(M);
  const int step = M / o.order();
  for (int k = 0; k < o.order(); ++k) {
    if (o.coeffs_[static_cast<std::size_t>(k)] != 0) coeffs_[static_cast<std::size_t>(k * step)] += o.coeffs_[static_cast<std::size_t>(k)];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  const int M = std::lcm(order(), o.order());
  if (M != order()) *this = lifted(M);
  const int step = M / o.order();
  for (int k = 0; k < o.order(); ++k) {
    if (o.coeffs_[static_cast<std::size_t>(k)] != 0) coeffs_[static_cast<std::size_t>(k * step)] -= o.coeffs_[static_cast<std::size_t>(k)];
  }
  return *this;
}

Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
  const int M = std::lcm(x.order(), y.order());
  Cyclotomic a = x.lifted(M), b = y.lifted(M);
  std::vector<Rational> v(static_cast<std::size_t>(M));
  for (int i = 0; i < M; ++i) {
    if (a.coeffs_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < M; ++j) {
      if (b.coeffs_[static_cast<std::size_t>(j)] == 0) continue;
      v[static_cast<std::size_t>((i + j) % M)] += a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return Cyclotomic(std::move(v));
}

bool operator==(const Cyclotomic& x, const Cyclotomic& y) { return (x - y).is_zero(); }

std::string Cyclotomic::str() const {
  auto r = reduced();
  const int N = order();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] == 0) continue;
    std::string c = to_string(r[k]);
    bool negative = c[0] == '-';
    if (negative) c.erase(0, 1);
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    if (k == 0) {
      os << c;
    } else {
      if (c != "1") os << c << "*";
      os << "z" << N;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) { return os << z.str(); }

}  // namespace gl2
