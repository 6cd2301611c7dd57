#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <iostream>
#include <random>

#include "gl2/basic_functions.hpp"

using namespace gl2;

namespace {

LaurentQ v(std::int64_t q, int k = 1) { return LaurentQ::v_power(q, k); }

// h_n by listing all multisets of size n drawn from the weight list.
std::map<Monomial, LaurentQ> multiset_oracle(const std::vector<Monomial>& w, int n) {
  std::map<Monomial, LaurentQ> out;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  const int d = static_cast<int>(w.size());
  std::function<void(int, int, int, int)> rec = [&](int pos, int start, int i, int j) {
    if (pos == n) {
      out[{i, j}] += 1;
      return;
    }
    for (int k = start; k < d; ++k) rec(pos + 1, k, i + w[static_cast<std::size_t>(k)].first, j + w[static_cast<std::size_t>(k)].second);
  };
  rec(0, 0, 0, 0);
  return out;
}

ExactComplex unit_point(int a, int b, int c) { return ExactComplex(LaurentQ(Rational(a, c)), LaurentQ(Rational(b, c))); }

}  // namespace

TEST_CASE("rep weights") {
  CHECK(rep_weights(RepSpec::standard()) == std::vector<Monomial>{{1, 0}, {0, 1}});
  CHECK(rep_weights(RepSpec::sym(2)) == std::vector<Monomial>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(rep_weights(RepSpec::sym(1, 1)) == std::vector<Monomial>{{2, 1}, {1, 2}});
  CHECK(RepSpec::sym(3).dimension() == 4);
  CHECK(RepSpec::adjoint_proxy().dimension() == 4);
  CHECK(RepSpec::parse("sym3*det^-1").weights == RepSpec::sym(3, -1).weights);
  CHECK(RepSpec::parse("std*det").weights == RepSpec::sym(1, 1).weights);
  CHECK(RepSpec::parse("det^2").weights == RepSpec::sym(0, 2).weights);
  CHECK(RepSpec::parse("trivial").weights == RepSpec::sym(0).weights);
  CHECK_THROWS_AS(RepSpec::parse("spin7"), std::invalid_argument);
}

TEST_CASE("symn_trace examples and multiset oracle") {
  CHECK(symn_trace(RepSpec::standard(), 0) == SymLaurent::constant(1));
  CHECK(symn_trace(RepSpec::standard(), 2) == SymLaurent::orbit(2, 0, 1) + SymLaurent::orbit(1, 1, 1));
  auto s2 = symn_trace(RepSpec::sym(2), 2);
  CHECK(s2 == SymLaurent::orbit(4, 0, 1) + SymLaurent::orbit(3, 1, 1) + SymLaurent::orbit(2, 2, 2));
  for (const auto& r : {RepSpec::sym(2), RepSpec::sym(3, 1), RepSpec::adjoint_proxy(), RepSpec::sym(4, -2)})
    for (int n = 0; n <= 5; ++n) CHECK(symn_trace(r, n) == SymLaurent(multiset_oracle(r.weights, n)));
  CHECK_THROWS_AS(symn_trace(RepSpec::standard(), -1), std::invalid_argument);
}

TEST_CASE("basic coefficient examples") {
  for (std::int64_t q : {2, 3, 5}) {
    LocalField f(q);
    CHECK(basic_coeff(RepSpec::standard(), 0, f) == HeckeElement::unit(f));
    CHECK(basic_coeff(RepSpec::standard(), 1, f) == v(q, -1) * HeckeElement::hecke_operator(f));
    // c fixed by T_p * T_p = char(2,0) + (q+1) char(1,1) and Y1^2+Y1Y2+Y2^2 = (Y1+Y2)^2 - Y1Y2
    auto tp = HeckeElement::hecke_operator(f);
    auto expected = v(q, -2) * convolve(tp, tp) - HeckeElement::basis(f, 1, 1);
    auto b2 = basic_coeff(RepSpec::standard(), 2, f);
    CHECK(b2 == expected);
    CHECK(b2.coefficient(Cocharacter(2, 0)) == v(q, -2));
    CHECK(b2.coefficient(Cocharacter(1, 1)) == LaurentQ(Rational(1, q)));
  }
}

TEST_CASE("support growth and positivity") {
  LocalField f(3);
  for (const auto& r : {RepSpec::standard(), RepSpec::sym(2), RepSpec::sym(3), RepSpec::sym(1, 1)}) {
    for (int n = 0; n <= 6; ++n) {
      auto h = basic_coeff(r, n, f);
      for (const auto& [mu, c] : h.terms()) CHECK(mu.det_valuation() == n * r.determinant_degree());
      if (n > 0) CHECK(static_cast<int>(h.terms().size()) <= n * (r.dimension() - 1) / 2 + 1);
    }
  }
  for (int n = 0; n <= 10; ++n) {
    auto h = basic_coeff(RepSpec::standard(), n, f);
    for (const auto& [mu, c] : h.terms()) CHECK(c.is_nonnegative());
  }
}

TEST_CASE("std basic function against the Mat2(O) description") {
  // The inverse Satake normalization differs from char(Mat2(O), det val n)
  // by the constant q^{-n/2}, i.e. an s-shift of 1/2.
  for (std::int64_t q : {2, 3, 5, 7}) {
    LocalField f(q);
    for (int n = 0; n <= 8; ++n) {
      auto h = basic_coeff(RepSpec::standard(), n, f);
      CHECK(h == v(q, -n) * mat2_characteristic(f, n));
    }
  }
  MESSAGE("basic_coeff(std, n) = q^{-n/2} * char{Mat2(O), val det = n}: offset q^{-n/2} (s-shift 1/2)");
}

TEST_CASE("local L-factors") {
  auto one = ExactComplex(1);
  auto l = local_l_factor(RepSpec::standard(), one, one);
  CHECK(l.numerator() == Polynomial<ExactComplex>::constant(1));
  CHECK(l.denominator() == Polynomial<ExactComplex>(std::vector<ExactComplex>{1, -2, 1}));

  auto alpha = unit_point(3, 4, 5), beta = unit_point(5, 12, 13);
  auto l2 = local_l_factor(RepSpec::standard(), alpha, beta);
  CHECK(l2.denominator() == Polynomial<ExactComplex>(std::vector<ExactComplex>{1, -(alpha + beta), alpha * beta}));
  CHECK(l2.denominator().degree() == 2);

  // Sym^2 with alpha beta = 1
  auto a = unit_point(3, 4, 5);
  auto ai = a.inverse();
  auto l3 = local_l_factor(RepSpec::sym(2), a, ai);
  auto expected = Polynomial<ExactComplex>(std::vector<ExactComplex>{1, -(a * a)}) *
                  Polynomial<ExactComplex>(std::vector<ExactComplex>{1, -1}) *
                  Polynomial<ExactComplex>(std::vector<ExactComplex>{1, -(ai * ai)});
  CHECK(l3.denominator() == expected);

  auto ln = local_l_factor(RepSpec::standard(), std::complex<double>(0.5, 0), std::complex<double>(2, 0));
  CHECK(ln.evaluate(0.1).real() == doctest::Approx(1.0 / (0.95 * 0.8)));
}

TEST_CASE("truncated basic identity") {
  LocalField f2(2);
  auto [h0, l0] = truncated_basic_identity(RepSpec::standard(), unit_point(3, 4, 5), unit_point(3, -4, 5), 0, f2);
  CHECK(h0 == l0);
  CHECK(h0[0] == ExactComplex(1));

  auto [h, l] = truncated_basic_identity(RepSpec::standard(), 1, 1, 3, f2);
  CHECK(h == l);
  for (int n = 0; n <= 3; ++n) CHECK(h[n] == ExactComplex(n + 1));

  auto a = unit_point(5, 12, 13);
  auto [h3, l3] = truncated_basic_identity(RepSpec::sym(3), a, a.conj(), 8, LocalField(3));
  CHECK(h3 == l3);
  CHECK_THROWS_AS(truncated_basic_identity(RepSpec::standard(), 1, 1, -1, f2), std::invalid_argument);
}
