#include "gl2/orbital.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gl2 {

SplitClass::SplitClass(LocalField field, Rational t1, Rational t2)
    : field_(field), t1_(std::move(t1)), t2_(std::move(t2)) {
  if (t1_ == 0 || t2_ == 0) throw std::invalid_argument("split class entries must be nonzero");
  e1_ = valuation(t1_, field_.q());
  e2_ = valuation(t2_, field_.q());
  d_ = valuation(Rational(t1_ - t2_), field_.q());
}

SplitClass SplitClass::from_entries(LocalField field, Rational t1, Rational t2) {
  return SplitClass(field, std::move(t1), std::move(t2));
}

SplitClass SplitClass::from_valuations(LocalField field, int e1, int e2, std::optional<int> d) {
  const std::int64_t p = field.q();
  Rational t1 = int_power(p, e1);
  if (e1 != e2) {
    if (d && *d != std::min(e1, e2)) throw std::invalid_argument("val(t1 - t2) must equal min(e1, e2) when e1 != e2");
    return SplitClass(field, t1, int_power(p, e2));
  }
  if (!d) throw std::invalid_argument("val(t1 - t2) is required when e1 == e2");
  if (*d == kInfiniteValuation) return SplitClass(field, t1, t1);
  if (*d < e1) throw std::invalid_argument("val(t1 - t2) cannot be below val t1");
  if (*d == e1) {
    // t2 = -t1 keeps a unit difference only for odd p
    if (p == 2) throw std::invalid_argument("over Q_2 two units always differ by an even number");
    return SplitClass(field, t1, -t1);
  }
  return SplitClass(field, t1, t1 - int_power(p, *d));
}

LaurentQ SplitClass::H() const { return LaurentQ::v_power(field_.q(), 2 * (e2_ - e1_)); }

LaurentQ SplitClass::discriminant_sqrt() const {
  if (!is_regular()) throw std::domain_error("discriminant vanishes at a singular class");
  return LaurentQ::v_power(field_.q(), e1_ + e2_ - 2 * d_);
}

std::string SplitClass::str() const {
  std::ostringstream os;
  os << "diag(" << to_string(t1_) << ", " << to_string(t2_) << ") over Q_" << field_.q() << " [e1=" << e1_
     << " e2=" << e2_ << " d=";
  if (is_regular()) os << d_;
  else os << "inf";
  os << "]";
  return os.str();
}

namespace {

// Measure of {x in F : [[t1, x c], [0, t2]] in K diag(p^a, p^b) K} where
// val c = shift, times the summed coefficients; entries t1, t2 have valuations e1, e2.
LaurentQ n_measure(const HeckeElement& h, int e1, int e2, int shift) {
  const std::int64_t q = h.q();
  const int m0 = std::min(e1, e2);
  const LaurentQ one_minus = LaurentQ(1) - LaurentQ(Rational(1, q));
  LaurentQ acc;
  for (const auto& [mu, c] : h.terms()) {
    if (mu.det_valuation() != e1 + e2 || mu.b > m0) continue;
    if (mu.b == m0) {
      // val x >= m0 - shift
      acc += c * LaurentQ(int_power(q, shift - m0));
    } else {
      // val x = b - shift exactly
      acc += c * LaurentQ(int_power(q, shift - mu.b)) * one_minus;
    }
  }
  return acc;
}

}  // namespace

LaurentQ split_orbital(const HeckeElement& h, const SplitClass& gamma) {
  if (h.field() != gamma.field()) throw std::invalid_argument("split_orbital: different base fields");
  if (!gamma.is_regular()) throw std::domain_error("split_orbital: class is singular (t1 = t2)");
  // n(x)^-1 gamma n(x) = [[t1, x (t1 - t2)], [0, t2]]
  return gamma.discriminant_sqrt() * n_measure(h, gamma.e1(), gamma.e2(), gamma.d());
}

LaurentQ phi_transform(const HeckeElement& h, const SplitClass& a) {
  if (h.field() != a.field()) throw std::invalid_argument("phi_transform: different base fields");
  // a n(x) = [[t1, t1 x], [0, t2]]
  return a.H() * n_measure(h, a.e1(), a.e2(), a.e1());
}

TreeOracleResult tree_orbital_oracle(const HeckeElement& h, const SplitClass& gamma, int depth, int jobs) {
  if (h.field() != gamma.field()) throw std::invalid_argument("tree_orbital_oracle: different base fields");
  if (!gamma.is_regular()) throw std::domain_error("tree_orbital_oracle: class is singular");
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  const std::int64_t p = h.q();
  Integer count_z;
  mpz_ui_pow_ui(count_z.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(depth));
  if (count_z > Integer(100'000'000L)) throw std::length_error("tree_orbital_oracle: depth too large");
  const long count = count_z.get_si();

  const Rational diff = gamma.t1() - gamma.t2();
  const Rational scale = int_power(p, -depth);
  const int v1 = valuation(gamma.t1(), p), v2 = valuation(gamma.t2(), p);
  const int vdet = valuation(Rational(gamma.t1() * gamma.t2()), p);

  auto sum_range = [&](long lo, long hi) {
    LaurentQ acc;
    for (long m = lo; m < hi; ++m) {
      Rational x = Rational(m) * scale;
      Rational upper = x * diff;
      Cocharacter lambda = elementary_divisors(v1, valuation(upper, p), kInfiniteValuation, v2, vdet);
      acc += h.coefficient(lambda);
    }
    return acc;
  };

  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::min<long>(count, 64))));
  std::vector<LaurentQ> partial(static_cast<std::size_t>(jobs));
  if (jobs == 1) {
    partial[0] = sum_range(0, count);
  } else {
    std::vector<std::thread> workers;
    for (int k = 0; k < jobs; ++k) {
      long lo = count * k / jobs, hi = count * (k + 1) / jobs;
      workers.emplace_back([&, k, lo, hi] { partial[static_cast<std::size_t>(k)] = sum_range(lo, hi); });
    }
    for (auto& w : workers) w.join();
  }
  LaurentQ total;
  for (const auto& s : partial) total += s;

  // |D|^{1/2} from the entries: val D = 2 val(t1 - t2) - val(t1 t2)
  const int val_disc = 2 * valuation(diff, p) - vdet;
  TreeOracleResult out;
  out.value = LaurentQ::v_power(p, -val_disc) * total;
  out.depth = depth;
  out.terms = count;
  // Shells with val x <= -depth - 1 have an entry of valuation <= d - depth - 1;
  // they vanish once that is below every b in the support.
  int b_min = std::numeric_limits<int>::max();
  for (const auto& [mu, c] : h.terms()) b_min = std::min(b_min, mu.b);
  out.stabilized = h.is_zero() || valuation(diff, p) - depth - 1 < b_min;
  return out;
}

std::optional<int> v_exponent(const LaurentQ& x, std::int64_t q) {
  // x = q^k (even power) or q^k v (odd power)
  if (x.is_zero() || (!x.is_rational() && x.rational_part() != 0)) return std::nullopt;
  const bool odd = !x.is_rational();
  Rational r = odd ? x.v_part() : x.rational_part();
  if (r <= 0) return std::nullopt;
  int k = 0;
  while (r != 1 && r.get_den() == 1 && r.get_num() % q == 0) {
    r /= q;
    ++k;
  }
  while (r != 1 && r.get_num() == 1 && r.get_den() % q == 0) {
    r *= q;
    --k;
  }
  if (r != 1) return std::nullopt;
  return 2 * k + (odd ? 1 : 0);
}

std::optional<Rational> measured_phi_exponent(const HeckeElement& h, const SplitClass& a) {
  if (!a.is_regular() || a.e1() == a.e2()) return std::nullopt;
  LaurentQ fg = split_orbital(h, a);
  if (fg.is_zero()) return std::nullopt;
  auto k = v_exponent(phi_transform(h, a) / fg, h.q());
  if (!k) return std::nullopt;
  // H = v^{2(e2 - e1)}
  Rational kappa(*k, 2 * (a.e2() - a.e1()));
  kappa.canonicalize();
  return kappa;
}

Series<LaurentQ> orbital_zeta(const SplitClass& gamma, const RepSpec& r, int N) {
  if (N < 0) throw std::invalid_argument("series order must be >= 0");
  std::vector<LaurentQ> coeffs;
  for (int n = 0; n <= N; ++n) coeffs.push_back(split_orbital(basic_coeff(r, n, gamma.field()), gamma));
  return Series<LaurentQ>(std::move(coeffs));
}

Reconstruction rational_reconstruct(const Series<LaurentQ>& series, int deg_num, int deg_den, int certify) {
  if (deg_num < 0 || deg_den < 0) throw std::invalid_argument("degrees must be >= 0");
  const int fitted = deg_num + deg_den + 1;
  if (certify < 0) certify = fitted;
  const int available = series.order() + 1;
  if (available < fitted + certify) {
    throw std::invalid_argument("series order " + std::to_string(series.order()) + " too small: need " +
                                std::to_string(fitted + certify) + " coefficients");
  }
  auto s = [&](int k) { return k < 0 ? LaurentQ() : series[k]; };

  // Rows k = deg_num+1 .. deg_num+deg_den of sum_{i=1}^{D} q_i s_{k-i} = -s_k.
  const int D = deg_den;
  std::vector<std::vector<LaurentQ>> m(static_cast<std::size_t>(D), std::vector<LaurentQ>(static_cast<std::size_t>(D) + 1));
  for (int r = 0; r < D; ++r) {
    const int k = deg_num + 1 + r;
    for (int i = 1; i <= D; ++i) m[r][static_cast<std::size_t>(i - 1)] = s(k - i);
    m[r][static_cast<std::size_t>(D)] = -s(k);
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < D && row < D; ++col) {
    int piv = -1;
    for (int r = row; r < D; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[row], m[piv]);
    LaurentQ inv = m[row][col].inverse();
    for (auto& x : m[row]) x *= inv;
    for (int r = 0; r < D; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      LaurentQ f = m[r][col];
      for (int c = col; c <= D; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  Reconstruction out;
  out.fitted = fitted;
  for (int r = row; r < D; ++r) {
    if (!m[r][D].is_zero()) {
      out.reason = "no denominator of degree <= " + std::to_string(D) + " fits the window";
      return out;
    }
  }
  std::vector<LaurentQ> qc(static_cast<std::size_t>(D) + 1);
  qc[0] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) qc[static_cast<std::size_t>(pivot_col[r]) + 1] = m[r][D];

  // P = (Q S) mod t^{deg_num+1}; all later coefficients of Q S must vanish.
  std::vector<LaurentQ> pc(static_cast<std::size_t>(deg_num) + 1);
  for (int k = 0; k < available; ++k) {
    LaurentQ acc;
    for (int i = 0; i <= std::min(k, D); ++i) acc += qc[static_cast<std::size_t>(i)] * s(k - i);
    if (k <= deg_num) {
      pc[static_cast<std::size_t>(k)] = acc;
    } else if (!acc.is_zero()) {
      out.reason = "fit fails at coefficient t^" + std::to_string(k);
      out.certified = std::max(0, k - fitted);
      return out;
    }
  }
  out.certified = available - fitted;
  out.function = RationalFunction<LaurentQ>(Polynomial<LaurentQ>(pc), Polynomial<LaurentQ>(qc)).reduced();
  return out;
}

}  // namespace gl2
