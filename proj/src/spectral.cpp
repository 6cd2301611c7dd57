#include "gl2/spectral.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gl2 {

namespace {

using i128 = __int128;

Integer from_i128(i128 x) {
  bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  Integer hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~0ULL));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}

double to_double_power(std::int64_t p, double e) { return std::pow(static_cast<double>(p), e); }

}  // namespace

const Integer& EigenTable::at(std::int64_t p) const {
  auto it = ap.find(p);
  if (it == ap.end()) throw std::out_of_range("no eigenvalue for p = " + std::to_string(p) + " in table " + label);
  return it->second;
}

std::vector<std::int64_t> primes_up_to(std::int64_t X) {
  std::vector<std::int64_t> out;
  if (X < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(X) + 1, false);
  for (std::int64_t n = 2; n <= X; ++n) {
    if (composite[static_cast<std::size_t>(n)]) continue;
    out.push_back(n);
    for (std::int64_t m = n * n; m <= X; m += n) composite[static_cast<std::size_t>(m)] = true;
  }
  return out;
}

std::vector<Integer> tau_coefficients(std::int64_t X) {
  if (X < 1) throw std::invalid_argument("tau needs X >= 1");
  // prod (1 - q^n)^24 = sum a_n q^n with n a_n = -24 sum_{k=1}^n sigma(k) a_{n-k};
  // for X <= 2 * 10^4: |a_n| < 2^86, sigma(k) a_{n-k} < 2^102, sums < 2^122
  if (X > 20000) throw std::length_error("tau expansion limited to X <= 20000");
  const auto n_max = static_cast<std::size_t>(X);
  std::vector<i128> sigma(n_max, 0), a(n_max, 0);
  for (std::size_t d = 1; d < n_max; ++d)
    for (std::size_t m = d; m < n_max; m += d) sigma[m] += static_cast<i128>(d);
  a[0] = 1;
  for (std::size_t n = 1; n < n_max; ++n) {
    i128 acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += sigma[k] * a[n - k];
    acc *= -24;
    if (acc % static_cast<i128>(n) != 0) throw std::logic_error("tau recurrence lost integrality");
    a[n] = acc / static_cast<i128>(n);
  }
  std::vector<Integer> tau(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) tau[n] = from_i128(a[n - 1]);
  return tau;
}

EigenTable delta_qexpansion(std::int64_t X) {
  if (X < 2) throw std::invalid_argument("delta_qexpansion needs X >= 2");
  auto tau = tau_coefficients(X);
  EigenTable t;
  t.label = "Delta";
  t.weight = 12;
  t.bound = X;
  for (auto p : primes_up_to(X)) t.ap[p] = tau[static_cast<std::size_t>(p)];
  return t;
}

EigenTable read_eigentable(std::istream& is) {
  EigenTable t;
  std::string line;
  int lineno = 0;
  bool header = false;
  static const std::regex meta(R"(#\s*(\w+)\s*=\s*(\S+)\s*)");
  static const std::regex row(R"(\s*(\d+)\s*,\s*(-?\d+)\s*)");
  std::int64_t declared_bound = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::smatch m;
    if (!header) {
      if (std::regex_match(line, m, meta)) {
        if (m[1] == "label") t.label = m[2];
        else if (m[1] == "weight") t.weight = std::stoi(m[2]);
        else if (m[1] == "level") t.level = std::stoi(m[2]);
        else if (m[1] == "bound") declared_bound = std::stoll(m[2]);
        else throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown metadata '" + std::string(m[1]) + "'");
        continue;
      }
      if (line != "p,ap") throw std::invalid_argument("line " + std::to_string(lineno) + ": expected header p,ap");
      header = true;
      continue;
    }
    if (!std::regex_match(line, m, row)) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected integers p,ap");
    std::int64_t p = std::stoll(m[1]);
    if (!is_prime(p)) throw std::invalid_argument("line " + std::to_string(lineno) + ": " + std::string(m[1]) + " is not prime");
    if (!t.ap.emplace(p, Integer(std::string(m[2]))).second) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate p = " + std::to_string(p));
    }
  }
  if (!header) throw std::invalid_argument("missing header p,ap");
  if (t.level != 1) throw std::invalid_argument("only level one tables are supported");
  std::int64_t top = t.ap.empty() ? 0 : t.ap.rbegin()->first;
  t.bound = declared_bound ? declared_bound : top;
  if (t.bound < top) throw std::invalid_argument("declared bound below the largest prime");
  for (auto p : primes_up_to(t.bound))
    if (!t.ap.count(p)) throw std::invalid_argument("missing prime " + std::to_string(p));
  return t;
}

EigenTable load_eigentable(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_eigentable(in);
}

void write_eigentable(std::ostream& os, const EigenTable& t) {
  os << "# label = " << t.label << "\n# weight = " << t.weight << "\n# bound = " << t.bound << "\np,ap\n";
  for (const auto& [p, a] : t.ap) os << p << ',' << a.get_str() << '\n';
}

void save_eigentable(const std::string& path, const EigenTable& t) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  write_eigentable(out, t);
}

UnitarySatake satake_from_ap(const EigenTable& t, std::int64_t p) {
  UnitarySatake c;
  c.p = p;
  const double x = t.at(p).get_d() / to_double_power(p, (t.weight - 1) / 2.0);
  const double disc = x * x / 4 - 1;
  if (disc <= 0) {
    c.alpha = {x / 2, std::sqrt(-disc)};
    c.beta = {x / 2, -std::sqrt(-disc)};
  } else {
    c.alpha = x / 2 + std::sqrt(disc);
    c.beta = x / 2 - std::sqrt(disc);
  }
  c.ramanujan = std::abs(std::abs(c.alpha) - 1) < 1e-10 && std::abs(std::abs(c.beta) - 1) < 1e-10;
  return c;
}

std::complex<double> rep_trace(const RepSpec& r, const UnitarySatake& c) {
  std::complex<double> acc = 0;
  for (const auto& [i, j] : r.weights) acc += std::pow(c.alpha, i) * std::pow(c.beta, j);
  return acc;
}

std::complex<double> partial_euler(const RepSpec& r, const EigenTable& t, std::complex<double> s, std::int64_t X) {
  if (X > t.bound) throw std::invalid_argument("X exceeds the table bound");
  std::complex<double> acc = 1;
  for (auto p : primes_up_to(X)) {
    auto c = satake_from_ap(t, p);
    const std::complex<double> tp = std::exp(-s * std::log(static_cast<double>(p)));
    for (const auto& [i, j] : r.weights) acc /= 1.0 - std::pow(c.alpha, i) * std::pow(c.beta, j) * tp;
  }
  return acc;
}

EstimatorValue mr_estimator(const RepSpec& r, const EigenTable& t, std::int64_t N) {
  if (N - 1 > t.bound) throw std::invalid_argument("N exceeds the table bound");
  EstimatorValue e;
  e.N = N;
  for (auto p : primes_up_to(N - 1)) {
    const double lp = std::log(static_cast<double>(p));
    e.weighted_sum += lp * rep_trace(r, satake_from_ap(t, p)).real();
    e.log_sum += lp;
    ++e.primes;
  }
  if (e.primes == 0) throw std::invalid_argument("V_N is empty");
  e.prime_count = e.weighted_sum / static_cast<double>(e.primes);
  e.chebyshev = e.weighted_sum / e.log_sum;
  return e;
}

std::vector<ResiduePoint> residue_estimator(const RepSpec& r, const EigenTable& t, const std::vector<double>& grid) {
  if (t.ap.empty() || t.bound < 2) throw std::invalid_argument("empty eigenvalue table");
  std::vector<ResiduePoint> out;
  for (double s : grid) {
    if (!(s > 1)) throw std::invalid_argument("residue grid needs s > 1");
    ResiduePoint pt;
    pt.s = s;
    std::int64_t X = std::min<std::int64_t>(64, t.bound);
    double prev = (s - 1) * partial_euler(r, t, s, X).real();
    while (X < t.bound) {
      std::int64_t next = std::min<std::int64_t>(2 * X, t.bound);
      double cur = (s - 1) * partial_euler(r, t, s, next).real();
      X = next;
      bool stable = std::abs(cur - prev) <= 1e-4 * std::abs(cur);
      prev = cur;
      if (stable) {
        pt.stable = true;
        break;
      }
    }
    pt.X = X;
    pt.value = prev;
    out.push_back(pt);
  }
  return out;
}

}  // namespace gl2
