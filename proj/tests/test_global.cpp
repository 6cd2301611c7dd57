#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "gl2/global.hpp"
#include "gl2/intertwining.hpp"
#include "support.hpp"

using namespace gl2;

namespace {

HeckeElement random_rational_hecke(std::mt19937_64& rng, Place p) {
  LocalField f(p);
  HeckeElement h(f);
  std::uniform_int_distribution<int> key(-1, 2), n(1, 3);
  int terms = n(rng);
  for (int k = 0; k < terms; ++k) {
    int a = key(rng), b = key(rng);
    if (a < b) std::swap(a, b);
    h.add_term(Cocharacter(a, b), LaurentQ(gl2::testing::random_rational(rng, 4)));
  }
  return h;
}

PiecewiseLinear random_profile(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n(2, 4), y(-3, 3), step(1, 3);
  std::vector<Rational> xs, ys;
  Rational x(-2);
  int k = n(rng);
  for (int i = 0; i < k; ++i) {
    xs.push_back(x);
    ys.push_back(Rational(y(rng), 2));
    x += Rational(step(rng), 2);
  }
  return PiecewiseLinear(xs, ys);
}

GlobalTestFunction random_function(std::mt19937_64& rng, const std::vector<Place>& S, int terms) {
  GlobalTestFunction f(S);
  for (int k = 0; k < terms; ++k) {
    FactorizableTerm t;
    for (auto p : S)
      if (p != kInfinity) t.local.emplace(p, random_rational_hecke(rng, p));
    t.arch = {random_profile(rng), random_profile(rng), random_profile(rng), random_profile(rng)};
    f.add_term(t);
  }
  return f;
}

GlobalTestFunction char_k_everywhere(const std::vector<Place>& S) {
  return GlobalTestFunction(S, FactorizableTerm{{}, ArchimedeanFactor::bump()});
}

// Phi on PGL(2) from the Satake coefficients: Phi(diag(p^i, p^j)) = v^{j-i} S_ij.
Rational phi_from_satake(const HeckeElement& h, int e) {
  auto S = satake_transform(h);
  LaurentQ acc;
  for (int j = -8; j <= 8; ++j) acc += LaurentQ::v_power(h.q(), -e) * S.coefficient(j + e, j);
  REQUIRE(acc.is_rational());
  return acc.rational_part();
}

Rational sum_over_center(const HeckeElement& h, int e) {
  Rational acc = 0;
  for (int k = -10; k <= 10; ++k) acc += h.coefficient(dominant(e + k, k)).rational_part();
  return acc;
}

}  // namespace

TEST_CASE("profiles") {
  auto bump = PiecewiseLinear::parse("-1:0, 0:1 1:0");
  CHECK(bump.mass() == 1);
  CHECK(bump(Rational(1, 2)) == Rational(1, 2));
  CHECK(bump(Rational(3)) == 0);
  CHECK(PiecewiseLinear::parse("").mass() == 0);
  CHECK(PiecewiseLinear::parse(bump.str()).values() == bump.values());
  CHECK(PiecewiseLinear::parse("0:2 1/2:2").mass() == 1);
  CHECK_THROWS_AS(PiecewiseLinear::parse("1:0 0:1"), std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseLinear::parse("1"), std::invalid_argument);
}

TEST_CASE("local torus values against independent paths") {
  std::mt19937_64 rng(8);
  for (Place p : {2, 3, 5}) {
    for (int trial = 0; trial < 6; ++trial) {
      auto h = random_rational_hecke(rng, p);
      for (int e = -4; e <= 4; ++e) {
        CHECK(pgl_torus_value(h, e) == sum_over_center(h, e));
        CHECK(pgl_phi_value(h, e) == phi_from_satake(h, e));
      }
    }
    // T_p: f is 1 at e = +-1; Phi is 1 at diag(p, 1) and q at diag(1, p)
    auto T = HeckeElement::hecke_operator(LocalField(p));
    CHECK(pgl_torus_value(T, 1) == 1);
    CHECK(pgl_torus_value(T, -1) == 1);
    CHECK(pgl_torus_value(T, 0) == 0);
    CHECK(pgl_phi_value(T, 1) == 1);
    CHECK(pgl_phi_value(T, -1) == p);
  }
}

TEST_CASE("unit averages are local quadratic characters") {
  for (Place p : {2, 3, 5, 7}) {
    Rational vol = 0;
    for (const auto& [u, w] : unit_square_classes(p)) vol += w;
    CHECK(vol == 1);
    for (long d : {1, -4, 8, -8, -3, 5, 12, -15, 21}) {
      Integer dz(d);
      for (int e = -2; e <= 2; ++e) {
        Rational expected = 0;
        if (d % p != 0 && (p != 2 || ((d % 4) + 4) % 4 == 1)) {
          int chi = kronecker(dz, Integer(static_cast<long>(p)));
          expected = (e % 2 == 0) ? 1 : chi;
        }
        CHECK(unit_average(dz, p, e) == expected);
      }
    }
  }
}

TEST_CASE("torus support") {
  auto S = parse_places("inf,2,3");
  auto pts = torus_support(char_k_everywhere(S));
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].t == -1);
  CHECK(pts[1].t == 1);
  CHECK(pts[1].f_value == 1);
  CHECK(pts[1].phi_value == 1);

  FactorizableTerm t2{{{2, HeckeElement::hecke_operator(LocalField(2))}}, ArchimedeanFactor::bump()};
  auto with_T = torus_support(GlobalTestFunction(S, t2));
  CHECK(with_T.size() == 4);
  for (const auto& pt : with_T) {
    CHECK(std::abs(valuation(pt.t, 2)) == 1);
    CHECK(valuation(pt.t, 3) == 0);
  }

  FactorizableTerm none{{}, ArchimedeanFactor{}};
  CHECK(torus_support(GlobalTestFunction(S, none)).empty());
  CHECK(torus_support(GlobalTestFunction(S)).empty());
}

TEST_CASE("one-dimensional term") {
  auto S = parse_places("inf,2,3");
  NormalizationConstants c{1, Rational(3, 2)};
  auto K = char_k_everywhere(S);
  auto spec = one_dim_spectral(K, c);
  CHECK(spec.total == Rational(2) / Rational(3, 2));
  for (const auto& row : spec.rows)
    if (row.d != 1) CHECK(row.product == 0);
  CHECK(one_dim_geometric(K, c) == spec.total);
  CHECK(one_dim_spectral(GlobalTestFunction(S), c).total == 0);
  CHECK(one_dim_geometric(GlobalTestFunction(S), c) == 0);

  // determinant valuation 1 at 3: characters ramified at 3 see local factor 0,
  // the others see +-(q + 1) by the Kronecker value at 3
  FactorizableTerm t3{{{3, HeckeElement::hecke_operator(LocalField(3))}}, ArchimedeanFactor::bump()};
  auto T3 = GlobalTestFunction(S, t3);
  auto t3_report = one_dim_spectral(T3);
  for (const auto& row : t3_report.rows) {
    Rational local3 = row.local[1];
    if (row.d % 3 == 0) CHECK(local3 == 0);
    else CHECK(local3 == 4 * kronecker(row.d, Integer(3)));
  }
  // the Cartan ratio separates the two forms
  CHECK(one_dim_spectral(T3).total == 4 * 2);
  CHECK(one_dim_geometric(T3) == 2 * 2);
}

TEST_CASE("Cartan discrepancy") {
  for (Place p : {2, 3, 5}) {
    auto S = std::vector<Place>{kInfinity, p};
    LocalField f(p);
    auto report = cartan_discrepancy(char_k_everywhere(S));
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].ratio == 1);
    auto rT = cartan_discrepancy(GlobalTestFunction(S, FactorizableTerm{{{p, HeckeElement::hecke_operator(f)}}, {}}));
    REQUIRE(rT.rows.size() == 1);
    CHECK(rT.rows[0].group_volume == p + 1);
    CHECK(rT.rows[0].torus_points == 2);
    Rational expected(p + 1, 2);
    expected.canonicalize();
    CHECK(rT.rows[0].ratio == expected);
    CHECK(rT.totals[0].group_integral == p + 1);
    CHECK(rT.totals[0].torus_form == 2);
    auto rZ = cartan_discrepancy(GlobalTestFunction(S, FactorizableTerm{{{p, HeckeElement::basis(f, 1, 1)}}, {}}));
    CHECK(rZ.rows[0].ratio == 1);
  }
}

TEST_CASE("residual terms agree") {
  auto S23 = parse_places("inf,2,3");
  auto K = char_k_everywhere(S23);
  auto rs = residual_spectral(K);
  CHECK(rs.total == Rational(-1, 4) * 2);
  CHECK(residual_geometric(K) == rs.total);
  CHECK(residual_spectral(GlobalTestFunction(S23)).total == 0);

  // odd at infinity: the archimedean factor flips with the sign of d
  auto odd = PiecewiseLinear::parse("-1:0 0:1 1:0");
  FactorizableTerm t{{}, {odd, odd.scaled(-1), odd, odd.scaled(-1)}};
  auto odd_report = residual_spectral(GlobalTestFunction(S23, t));
  for (const auto& row : odd_report.rows) {
    CHECK(row.archimedean == (row.d < 0 ? 2 : 0));
  }

  std::mt19937_64 rng(31);
  for (const char* spec : {"inf,2", "inf,2,3", "inf,3,5"}) {
    auto S = parse_places(spec);
    ClassGroup D(S);
    for (int trial = 0; trial < 6; ++trial) {
      auto f = random_function(rng, S, 1 + trial % 2);
      auto spectral = residual_spectral(f);
      CHECK(spectral.total == residual_geometric(f));
      // the spherical trace of the induced representation equals the trivial-
      // character integral locally: torus integrals of Phi versus coset volumes
      auto one = one_dim_spectral(f);
      REQUIRE(one.rows.size() == spectral.rows.size());
      for (std::size_t i = 0; i < one.rows.size(); ++i) CHECK(one.rows[i].local == spectral.rows[i].local);
      if (f.terms().size() == 1) {
        auto F = residual_class_function(f, D);
        for (const auto& row : spectral.rows) CHECK(fourier(F, D.character(row.d)) == Cyclotomic(row.product));
        auto H = Subgroup::generated(D.group(), {});
        auto pr = poisson_check(D.group(), H, F);
        CHECK(pr.equal);
        CHECK(Cyclotomic(Rational(D.group().size())) * pr.lhs == Cyclotomic(Rational(-4) * residual_geometric(f)));
      }
    }
  }
}

TEST_CASE("correction term") {
  auto S = parse_places("inf,2");
  CHECK(correction_term(GlobalTestFunction(S)).total == 0);
  CHECK(correction_term(GlobalTestFunction(S)).rows.empty());
  auto K = char_k_everywhere(S);
  auto c = correction_term(K);
  REQUIRE(c.rows.size() == 2);
  CHECK(c.rows[0].t == -1);
  CHECK(c.rows[1].t == 1);
  CHECK(c.rows[1].one_dim == 1);
  CHECK(c.rows[1].residual == Rational(-1, 4));
  CHECK(c.total == 2 * Rational(3, 4));

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = random_function(rng, S, 1), g = random_function(rng, S, 2);
    NormalizationConstants nc{Rational(2), Rational(5, 3)};
    auto cf = correction_term(f, nc), cg = correction_term(g, nc), cfg = correction_term(f + g, nc);
    CHECK(cfg.total == cf.total + cg.total);
    CHECK(cfg.total == one_dim_geometric(f + g, nc) + residual_geometric(f + g));
    std::map<Rational, Rational> by_t;
    for (const auto& r : cf.rows) by_t[r.t] += r.total;
    for (const auto& r : cg.rows) by_t[r.t] += r.total;
    for (const auto& r : cfg.rows) CHECK(by_t[r.t] == r.total);
    CHECK(correction_term(f.scaled(3), nc).total == 3 * cf.total);
  }
}

TEST_CASE("configuration") {
  auto dir = std::filesystem::temp_directory_path() / "gl2_global_cfg";
  std::filesystem::create_directories(dir);
  {
    std::ofstream h(dir / "T3.hecke");
    write_hecke(h, HeckeElement::hecke_operator(LocalField(3)));
  }
  std::istringstream cfg(
      "# test\nplaces = inf,2,3\nvol_gbar = 2\nhecke.2 = 1,1\nhecke.3 = T3.hecke\narch_f = -1:0 0:1 1:0\narch_phi_neg = 0:0 1:2 2:0\n");
  auto c = parse_global_config(cfg, dir.string());
  CHECK(c.constants.vol_gbar == 2);
  CHECK(c.function.places() == parse_places("inf,2,3"));
  const auto& term = c.function.terms().at(0);
  CHECK(term.local.at(2) == HeckeElement::basis(LocalField(2), 1, 1));
  CHECK(term.local.at(3) == HeckeElement::hecke_operator(LocalField(3)));
  CHECK(term.arch.phi_mass(-1) == 2);
  CHECK(term.arch.phi_mass(1) == 1);

  std::istringstream unknown("places = inf\ncolour = blue\n");
  CHECK_THROWS_AS(parse_global_config(unknown), std::invalid_argument);
  std::istringstream outside("places = inf,2\nhecke.3 = unit\n");
  CHECK_THROWS_AS(parse_global_config(outside), std::invalid_argument);
  std::istringstream missing("places = inf,2\nhecke.2 = nowhere.hecke\n");
  CHECK_THROWS_AS(parse_global_config(missing), std::invalid_argument);

  FactorizableTerm irr{{{2, LaurentQ::v_power(2, 1) * HeckeElement::basis(LocalField(2), 1, 0)}}, {}};
  CHECK_THROWS_AS(GlobalTestFunction(parse_places("inf,2"), irr), std::invalid_argument);
}

TEST_CASE("intertwining constant") {
  CHECK(intertwining_constant() == -1);
  auto c4 = numeric_verify(1e-4);
  CHECK(c4.distance < 1e-3);
  double prev = numeric_verify(1e-1).distance;
  for (double s : {1e-2, 1e-3, 1e-4}) {
    double d = numeric_verify(s).distance;
    CHECK(d < prev);
    prev = d;
  }
  CHECK(std::abs(uncompleted_ratio_at_one() + 3 / (M_PI * M_PI)) < 1e-12);
  // xi(s) = xi(1 - s)
  for (double s : {0.2, 0.3, 0.7, 2.5}) CHECK(std::abs(completed_zeta(s) - completed_zeta(1 - s)) < 1e-10 * std::abs(completed_zeta(s)));
  CHECK_THROWS_AS(numeric_verify(0), std::invalid_argument);
}
