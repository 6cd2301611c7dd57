#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "gl2/basic_functions.hpp"
#include "gl2/rational.hpp"

namespace gl2 {

/// Hecke eigenvalues a_p of a level-one eigenform, every prime below `bound`.
struct EigenTable {
  std::string label = "form";
  int weight = 12;
  int level = 1;
  std::int64_t bound = 0;
  std::map<std::int64_t, Integer> ap;

  const Integer& at(std::int64_t p) const;
};

/// tau(1), ..., tau(X) from q prod_{n>=1} (1 - q^n)^24 (index 0 unused).
std::vector<Integer> tau_coefficients(std::int64_t X);
/// Eigenvalue table of Delta: primes p <= X.
EigenTable delta_qexpansion(std::int64_t X);

/// CSV with header `p,ap`; optional leading `# label = ...`, `# weight = ...`,
/// `# bound = ...` lines. Rejects duplicates, non-integers and gaps in the primes.
EigenTable read_eigentable(std::istream& is);
EigenTable load_eigentable(const std::string& path);
void write_eigentable(std::ostream& os, const EigenTable& t);
void save_eigentable(const std::string& path, const EigenTable& t);

/// Unitary Satake parameters: roots of x^2 - (a_p / p^{(k-1)/2}) x + 1.
struct UnitarySatake {
  std::int64_t p = 0;
  std::complex<double> alpha, beta;
  bool ramanujan = false;  // |alpha| = |beta| = 1 within 1e-10
};

UnitarySatake satake_from_ap(const EigenTable& t, std::int64_t p);

/// tr r(c) at unitary parameters.
std::complex<double> rep_trace(const RepSpec& r, const UnitarySatake& c);

/// prod_{p <= X} det(1 - r(c_p) p^{-s})^{-1}.
std::complex<double> partial_euler(const RepSpec& r, const EigenTable& t, std::complex<double> s, std::int64_t X);

enum class Normalization {
  PrimeCount,  // 1 / |V_N|
  Chebyshev,   // 1 / sum_{p < N} log p
};

struct EstimatorValue {
  std::int64_t N = 0;
  std::int64_t primes = 0;   // |V_N|
  double weighted_sum = 0;   // sum_{p < N} log p Re tr r(c_p)
  double log_sum = 0;        // sum_{p < N} log p
  double prime_count = 0;    // weighted_sum / |V_N|
  double chebyshev = 0;      // weighted_sum / log_sum
  double value(Normalization n) const { return n == Normalization::PrimeCount ? prime_count : chebyshev; }
};

/// Average of log p tr r(c_p) over V_N = {p < N}, both normalizations.
EstimatorValue mr_estimator(const RepSpec& r, const EigenTable& t, std::int64_t N);

struct ResiduePoint {
  double s = 0;
  std::int64_t X = 0;
  double value = 0;      // (s - 1) Re L^V(s)
  bool stable = false;   // relative change < 1e-4 on the last doubling of X
};

/// (s - 1) partial_euler(r, t, s, X(s)) along the grid, X doubling up to the table bound.
std::vector<ResiduePoint> residue_estimator(const RepSpec& r, const EigenTable& t, const std::vector<double>& grid);

/// Primes p <= X (sieve).
std::vector<std::int64_t> primes_up_to(std::int64_t X);

}  // namespace gl2
