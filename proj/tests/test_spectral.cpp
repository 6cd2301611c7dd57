#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>
#include <sstream>

#include "gl2/spectral.hpp"

using namespace gl2;

namespace {

// q prod (1 - q^n)^24 by repeated polynomial multiplication.
std::vector<Integer> tau_by_product(int M) {
  std::vector<Integer> c(static_cast<std::size_t>(M), 0);
  c[0] = 1;
  for (int n = 1; n < M; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (int k = M - 1; k >= n; --k) c[static_cast<std::size_t>(k)] -= c[static_cast<std::size_t>(k - n)];
  std::vector<Integer> tau(static_cast<std::size_t>(M) + 1);
  for (int n = 1; n <= M; ++n) tau[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n - 1)];
  return tau;
}

const EigenTable& delta_table() {
  static const EigenTable t = delta_qexpansion(10000);
  return t;
}

}  // namespace

TEST_CASE("tau from the q-expansion") {
  auto tau = tau_coefficients(200);
  CHECK(tau[1] == 1);
  CHECK(tau[2] == -24);
  CHECK(tau[3] == 252);
  CHECK(tau[5] == 4830);
  CHECK(tau[7] == -16744);
  CHECK(tau[11] == 534612);
  auto direct = tau_by_product(60);
  for (int n = 1; n <= 60; ++n) CHECK(tau[static_cast<std::size_t>(n)] == direct[static_cast<std::size_t>(n)]);
  auto big = tau_coefficients(3000);
  for (long p : {2, 3, 5, 7, 11, 13, 29, 53}) {
    Integer p11;
    mpz_ui_pow_ui(p11.get_mpz_t(), static_cast<unsigned long>(p), 11);
    CHECK(big[static_cast<std::size_t>(p * p)] == big[static_cast<std::size_t>(p)] * big[static_cast<std::size_t>(p)] - p11);
  }
  for (int m = 2; m <= 50; ++m)
    for (int n = m + 1; n * m <= 3000; n += 7)
      if (std::gcd(m, n) == 1) CHECK(big[static_cast<std::size_t>(m * n)] == big[static_cast<std::size_t>(m)] * big[static_cast<std::size_t>(n)]);
  auto t = delta_qexpansion(30);
  CHECK(t.ap.size() == 10);
  CHECK(t.at(29) == tau[29]);
  CHECK_THROWS_AS(t.at(31), std::out_of_range);
}

TEST_CASE("eigenvalue tables") {
  std::istringstream ok("p,ap\n2,-24\n3,252\n");
  auto t = read_eigentable(ok);
  CHECK(t.ap.size() == 2);
  CHECK(t.bound == 3);
  std::istringstream dup("p,ap\n2,-24\n2,-24\n");
  CHECK_THROWS_AS(read_eigentable(dup), std::invalid_argument);
  std::istringstream gap("p,ap\n2,-24\n5,4830\n");
  CHECK_THROWS_AS(read_eigentable(gap), std::invalid_argument);
  std::istringstream frac("p,ap\n2,-24.5\n");
  CHECK_THROWS_AS(read_eigentable(frac), std::invalid_argument);
  std::istringstream nohead("2,-24\n");
  CHECK_THROWS_AS(read_eigentable(nohead), std::invalid_argument);
  std::istringstream composite("p,ap\n2,1\n3,1\n4,1\n");
  CHECK_THROWS_AS(read_eigentable(composite), std::invalid_argument);

  auto d = delta_qexpansion(500);
  std::ostringstream os;
  write_eigentable(os, d);
  std::istringstream back(os.str());
  auto r = read_eigentable(back);
  CHECK(r.ap == d.ap);
  CHECK(r.weight == 12);
  CHECK(r.label == "Delta");
  CHECK(r.bound == 500);
  std::ostringstream again;
  write_eigentable(again, r);
  CHECK(again.str() == os.str());
}

TEST_CASE("Satake parameters") {
  EigenTable zero;
  zero.ap[2] = 0;
  zero.bound = 2;
  auto c0 = satake_from_ap(zero, 2);
  CHECK(std::abs(c0.alpha - std::complex<double>(0, 1)) < 1e-15);
  CHECK(std::abs(c0.beta - std::complex<double>(0, -1)) < 1e-15);

  const auto& D = delta_table();
  auto c2 = satake_from_ap(D, 2);
  CHECK(std::abs(c2.alpha + c2.beta - (-24 / std::pow(2.0, 5.5))) < 1e-14);
  CHECK(std::abs(c2.alpha * c2.beta - 1.0) < 1e-14);
  bool all = true;
  for (const auto& [p, a] : D.ap) all = all && satake_from_ap(D, p).ramanujan;
  CHECK(all);

  EigenTable wild;
  wild.ap[2] = 10000;
  wild.bound = 2;
  CHECK_FALSE(satake_from_ap(wild, 2).ramanujan);
}

TEST_CASE("partial Euler products") {
  const auto& D = delta_table();
  auto std_r = RepSpec::standard();
  CHECK(partial_euler(std_r, D, 3.0, 1) == std::complex<double>(1));
  double x = -24 / std::pow(2.0, 5.5);
  auto single = partial_euler(std_r, D, 3.0, 2);
  CHECK(std::abs(single - 1.0 / (1.0 - x / 8 + 1.0 / 64)) < 1e-14);

  // the exact local factor path at t = p^-s
  for (std::complex<double> s : {std::complex<double>(3.0), std::complex<double>(2.0, 1.5)}) {
    for (const auto& r : {std_r, RepSpec::sym(2), RepSpec::adjoint_proxy()}) {
      std::complex<double> prod = 1;
      for (auto p : primes_up_to(200)) {
        auto c = satake_from_ap(D, p);
        auto L = local_l_factor(r, c.alpha, c.beta);
        prod *= L.evaluate(std::exp(-s * std::log(static_cast<double>(p))));
      }
      CHECK(std::abs(partial_euler(r, D, s, 200) - prod) < 1e-12 * std::abs(prod));
    }
  }

  // Cauchy behaviour at s = 3: |log L_p| <= 2 p^-3 / (1 - p^-3)
  std::complex<double> prev = partial_euler(std_r, D, 3.0, 100);
  for (std::int64_t X : {200, 400, 800, 1600}) {
    auto cur = partial_euler(std_r, D, 3.0, X);
    double tail = 0;
    for (auto p : primes_up_to(X))
      if (p > X / 2) tail += 2.2 / std::pow(static_cast<double>(p), 3);
    CHECK(std::abs(cur - prev) <= std::abs(prev) * (std::exp(tail) - 1));
    prev = cur;
  }
  CHECK_THROWS_AS(partial_euler(std_r, D, 3.0, 20000), std::invalid_argument);
}

TEST_CASE("m_r estimators") {
  const auto& D = delta_table();
  auto triv = mr_estimator(RepSpec::trivial(), D, 10000);
  CHECK(triv.primes == 1229);
  CHECK(triv.weighted_sum == triv.log_sum);
  CHECK(triv.prime_count / (triv.log_sum / static_cast<double>(triv.primes)) == 1.0);
  CHECK(triv.chebyshev == 1.0);
  auto small = mr_estimator(RepSpec::trivial(), D, 1000);
  CHECK(small.prime_count < triv.prime_count);  // grows like log N

  auto sym2 = mr_estimator(RepSpec::sym(2), D, 10000);
  auto proxy = mr_estimator(RepSpec::adjoint_proxy(), D, 10000);
  MESSAGE("Sym^2: per-prime " << sym2.prime_count << ", Chebyshev " << sym2.chebyshev);
  MESSAGE("proxy: per-prime " << proxy.prime_count << ", Chebyshev " << proxy.chebyshev);
  CHECK(std::abs(sym2.chebyshev) < 0.3);
  CHECK(proxy.chebyshev > 0.6);
  CHECK(proxy.chebyshev < 1.4);
  // |tr std|^2 = 1 + tr Sym^2 on the unitary locus
  CHECK(std::abs(proxy.weighted_sum - (triv.weighted_sum + sym2.weighted_sum)) < 1e-8 * triv.weighted_sum);
  CHECK_THROWS_AS(mr_estimator(RepSpec::trivial(), D, 20000), std::invalid_argument);
}

TEST_CASE("residue estimator") {
  const auto& D = delta_table();
  std::vector<double> grid{2.0, 1.5, 1.25, 1.1};
  auto sym2 = residue_estimator(RepSpec::sym(2), D, grid);
  auto proxy = residue_estimator(RepSpec::adjoint_proxy(), D, grid);
  REQUIRE(sym2.size() == 4);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    MESSAGE("s = " << grid[i] << ": Sym^2 " << sym2[i].value << " (X = " << sym2[i].X << std::string(sym2[i].stable ? ", stable" : "")
                   << "), proxy " << proxy[i].value << " (X = " << proxy[i].X << std::string(proxy[i].stable ? ", stable" : "") << ")");
    CHECK(proxy[i].value > 0.2);
  }
  CHECK(std::abs(sym2.back().value) < std::abs(sym2.front().value) / 5);
  CHECK(sym2.front().stable);
  EigenTable empty;
  CHECK_THROWS_AS(residue_estimator(RepSpec::sym(2), empty, grid), std::invalid_argument);
  CHECK_THROWS_AS(residue_estimator(RepSpec::sym(2), D, {0.9}), std::invalid_argument);
}
