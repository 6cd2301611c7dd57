#include "gl2/basic_functions.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <stdexcept>

namespace gl2 {

RepSpec RepSpec::sym(int k, int m) {
  if (k < 0) throw std::invalid_argument("symmetric power degree must be >= 0");
  RepSpec r;
  for (int i = 0; i <= k; ++i) r.weights.push_back({k - i + m, i + m});
  if (k == 0) {
    r.label = m == 0 ? "trivial" : "det^" + std::to_string(m);
  } else {
    r.label = k == 1 ? "std" : "sym" + std::to_string(k);
    if (m != 0) r.label += "*det^" + std::to_string(m);
  }
  return r;
}

RepSpec RepSpec::tensor(const RepSpec& r, const RepSpec& s) {
  RepSpec out;
  for (const auto& w1 : r.weights)
    for (const auto& w2 : s.weights) out.weights.push_back({w1.first + w2.first, w1.second + w2.second});
  out.label = r.label + "(x)" + s.label;
  return out;
}

RepSpec RepSpec::dual(const RepSpec& r) {
  RepSpec out;
  for (const auto& w : r.weights) out.weights.push_back({-w.first, -w.second});
  out.label = r.label + "^v";
  return out;
}

RepSpec RepSpec::parse(const std::string& text) {
  if (text == "trivial") return trivial();
  if (text == "proxy" || text == "adjoint") return adjoint_proxy();
  static const std::regex twisted(R"((std|sym(\d+))(\*det(\^(-?\d+))?)?)");
  static const std::regex det_power(R"(det(\^(-?\d+))?)");
  std::smatch m;
  if (std::regex_match(text, m, det_power)) return sym(0, m[2].matched ? std::stoi(m[2]) : 1);
  if (!std::regex_match(text, m, twisted)) throw std::invalid_argument("unknown representation '" + text + "'");
  int twist = 0;
  if (m[3].matched) twist = m[5].matched ? std::stoi(m[5]) : 1;
  int k = m[1] == "std" ? 1 : std::stoi(m[2]);
  return sym(k, twist);
}

int RepSpec::determinant_degree() const {
  if (weights.empty()) return 0;
  return weights.front().first + weights.front().second;
}

std::vector<Monomial> rep_weights(const RepSpec& r) { return r.weights; }

SymLaurent symn_trace(const RepSpec& r, int n) {
  if (n < 0) throw std::invalid_argument("symn_trace: n must be >= 0");
  // Coefficient of t^n in prod_w (1 - w t)^-1, multiplying one factor at a time.
  using Poly = std::map<Monomial, LaurentQ>;
  std::vector<Poly> s(static_cast<std::size_t>(n) + 1);
  s[0][{0, 0}] = 1;
  for (const auto& w : r.weights) {
    for (int k = 1; k <= n; ++k) {
      for (const auto& [m, c] : s[static_cast<std::size_t>(k - 1)]) {
        s[static_cast<std::size_t>(k)][{m.first + w.first, m.second + w.second}] += c;
      }
    }
  }
  return SymLaurent(std::move(s[static_cast<std::size_t>(n)]));
}

HeckeElement basic_coeff(const RepSpec& r, int n, const LocalField& field) {
  return inverse_satake(symn_trace(r, n), field);
}

HeckeElement mat2_characteristic(const LocalField& field, int n) {
  HeckeElement h(field);
  for (int b = 0; 2 * b <= n; ++b) h.add_term(Cocharacter(n - b, b), 1);
  return h;
}

namespace {

template <class C, class Eval>
RationalFunction<C> l_factor(const RepSpec& r, Eval eval) {
  Polynomial<C> den = Polynomial<C>::constant(C(1));
  for (const auto& w : r.weights) {
    den = den * Polynomial<C>(std::vector<C>{C(1), C(0) - eval(w)});
  }
  return RationalFunction<C>(Polynomial<C>::constant(C(1)), den);
}

}  // namespace

RationalFunction<ExactComplex> local_l_factor(const RepSpec& r, const ExactComplex& alpha, const ExactComplex& beta) {
  return l_factor<ExactComplex>(r, [&](const Monomial& w) { return pow(alpha, w.first) * pow(beta, w.second); });
}

RationalFunction<std::complex<double>> local_l_factor(const RepSpec& r, std::complex<double> alpha,
                                                      std::complex<double> beta) {
  return l_factor<std::complex<double>>(
      r, [&](const Monomial& w) { return std::pow(alpha, w.first) * std::pow(beta, w.second); });
}

std::pair<Series<ExactComplex>, Series<ExactComplex>> truncated_basic_identity(const RepSpec& r,
                                                                               const ExactComplex& alpha,
                                                                               const ExactComplex& beta, int N,
                                                                               const LocalField& field) {
  if (N < 0) throw std::invalid_argument("truncation order must be >= 0");
  std::vector<ExactComplex> hecke_side;
  for (int n = 0; n <= N; ++n) hecke_side.push_back(spherical_trace(basic_coeff(r, n, field), alpha, beta));
  return {Series<ExactComplex>(std::move(hecke_side)), local_l_factor(r, alpha, beta).expand(N)};
}

}  // namespace gl2
