#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <sstream>

#include "gl2/poisson.hpp"

using namespace gl2;

namespace {

GroupFunction random_function(std::mt19937_64& rng, const FiniteAbelianGroup& G, double density = 0.5) {
  GroupFunction f(G);
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> num(-7, 7), den(1, 6);
  for (auto& v : f.values)
    if (u(rng) < density) v = Cyclotomic(Rational(num(rng), den(rng)));
  for (auto& v : f.values) {
    auto r = v.to_rational();
    r.canonicalize();
    v = Cyclotomic(r);
  }
  return f;
}

// Direct evaluation of both sides through character values, no fast paths.
std::pair<Cyclotomic, Cyclotomic> brute_poisson(const FiniteAbelianGroup& G, const std::vector<Element>& H,
                                                 const GroupFunction& f) {
  Cyclotomic lhs(0), rhs(0);
  for (const auto& h : H) lhs += f(h);
  for (const auto& psi : characters(G)) {
    bool on_H = true;
    for (const auto& h : H)
      if (!psi(G, h).is_rational() || psi(G, h).to_rational() != 1) on_H = false;
    if (!on_H) continue;
    for (std::int64_t i = 0; i < G.size(); ++i) {
      auto g = G.element(i);
      rhs += f(g) * psi(G, g).conj();
    }
  }
  rhs = Cyclotomic(Rational(static_cast<long>(H.size()), static_cast<unsigned long>(G.size()))) * rhs;
  return {lhs, rhs};
}

bool squarefree(long n) {
  n = std::labs(n);
  for (long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

bool fundamental(long d) {
  if (d == 1) return true;
  long m = ((d % 4) + 4) % 4;
  if (m == 1) return squarefree(d);
  if (m == 0) {
    long e = d / 4, r = ((e % 4) + 4) % 4;
    return (r == 2 || r == 3) && squarefree(e);
  }
  return false;
}

bool supported_on(long n, const std::vector<Place>& S) {
  n = std::labs(n);
  for (auto p : S) {
    if (p == kInfinity) continue;
    while (n % p == 0) n /= p;
  }
  return n == 1;
}

long euler_criterion(long d, long p) {
  long r = 1, b = ((d % p) + p) % p;
  for (long e = (p - 1) / 2; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r == p - 1 ? -1 : r;
}

std::vector<Rational> sample_s_units(const std::vector<Place>& S) {
  std::vector<Rational> out;
  std::vector<Rational> acc{Rational(1), Rational(-1)};
  for (auto p : S) {
    if (p == kInfinity) continue;
    std::vector<Rational> next;
    for (const auto& a : acc)
      for (int e = -2; e <= 2; ++e) next.push_back(a * int_power(p, e));
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

TEST_CASE("characters") {
  CHECK(characters(FiniteAbelianGroup({2})).size() == 2);
  CHECK(characters(FiniteAbelianGroup({2, 2})).size() == 4);
  FiniteAbelianGroup Z4({4});
  auto chars = characters(Z4);
  REQUIRE(chars.size() == 4);
  bool faithful = false;
  for (const auto& psi : chars) {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        CHECK(psi(Z4, Z4.add({a}, {b})) == psi(Z4, {a}) * psi(Z4, {b}));
    int order = 1;
    while (psi(Z4, {order}) != Cyclotomic(1)) ++order;
    if (order == 4) faithful = true;
  }
  CHECK(faithful);
  FiniteAbelianGroup G({2, 6});
  std::set<std::vector<std::string>> tables;
  for (const auto& psi : characters(G)) {
    std::vector<std::string> row;
    for (std::int64_t i = 0; i < G.size(); ++i) row.push_back(psi(G, G.element(i)).str());
    tables.insert(row);
  }
  CHECK(tables.size() == 12);
}

TEST_CASE("fourier examples and duality") {
  FiniteAbelianGroup G({2, 3, 4});
  GroupFunction one(G), delta(G);
  for (auto& v : one.values) v = Cyclotomic(1);
  delta[G.identity()] = Cyclotomic(1);
  for (const auto& psi : characters(G)) {
    CHECK(fourier(one, psi) == Cyclotomic(psi.is_trivial() ? 24 : 0));
    CHECK(fourier(delta, psi) == Cyclotomic(1));
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    auto f = random_function(rng, G);
    if (trial % 2) f[{1, 1, 3}] = Cyclotomic::gaussian(Rational(1, 2), Rational(-3));
    auto ff = fourier_transform(fourier_transform(f));
    for (std::int64_t i = 0; i < G.size(); ++i) {
      auto g = G.element(i);
      CHECK(ff(g) == Cyclotomic(24) * f(G.negate(g)));
    }
    // the fast path against the direct character sum
    for (const auto& psi : characters(G)) {
      Cyclotomic direct(0);
      for (std::int64_t i = 0; i < G.size(); ++i) direct += f(G.element(i)) * psi(G, G.element(i)).conj();
      CHECK(fourier(f, psi) == direct);
    }
  }
}

TEST_CASE("Poisson examples") {
  FiniteAbelianGroup Z4({4});
  GroupFunction d0(Z4);
  d0[{0}] = Cyclotomic(1);
  auto H = Subgroup::generated(Z4, {{2}});
  CHECK(H.size() == 2);
  auto r = poisson_check(Z4, H, d0);
  CHECK(r.equal);
  CHECK(r.lhs == Cyclotomic(1));
  CHECK(r.rhs == Cyclotomic(1));

  FiniteAbelianGroup G({2, 4, 3});
  GroupFunction one(G);
  for (auto& v : one.values) v = Cyclotomic(1);
  auto K = Subgroup::generated(G, {{1, 2, 0}, {0, 0, 1}});
  auto ro = poisson_check(G, K, one);
  CHECK(ro.equal);
  CHECK(ro.lhs == Cyclotomic(static_cast<long>(K.size())));

  CHECK_THROWS_AS(Subgroup::from_elements(Z4, {{0}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(Subgroup::from_elements(Z4, {{1}, {3}}), std::invalid_argument);
  CHECK(Subgroup::from_elements(Z4, {{0}, {2}}).size() == 2);
}

TEST_CASE("Poisson on random inputs against the brute-force sides") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> pick(0, 15);
  FiniteAbelianGroup G({2, 2, 2, 2});
  for (int trial = 0; trial < 40; ++trial) {
    auto f = random_function(rng, G);
    std::vector<Element> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(G.element(pick(rng)));
    auto H = Subgroup::generated(G, gens);
    auto r = poisson_check(G, H, f);
    auto [lhs, rhs] = brute_poisson(G, H.elements(), f);
    CHECK(r.equal);
    CHECK(r.lhs == lhs);
    CHECK(r.rhs == rhs);
  }
  FiniteAbelianGroup M({3, 4, 5});
  for (int trial = 0; trial < 5; ++trial) {
    auto f = random_function(rng, M);
    f[{2, 1, 4}] = Cyclotomic::gaussian(Rational(2, 3), Rational(1, 5));
    auto H = Subgroup::generated(M, {{1, 2, 0}});
    auto r = poisson_check(M, H, f);
    auto [lhs, rhs] = brute_poisson(M, H.elements(), f);
    CHECK(r.equal);
    CHECK(r.rhs == rhs);
  }
}

TEST_CASE("group text format") {
  std::istringstream in("# a comment\ngroup 2 2\nf 1 0 3/2\nf 0 1 1,-1\nh 1 1\n");
  auto g = read_group_input(in);
  CHECK(g.group.orders() == std::vector<int>{2, 2});
  CHECK(g.function({1, 0}) == Cyclotomic(Rational(3, 2)));
  CHECK(g.function({0, 1}) == Cyclotomic::gaussian(1, -1));
  CHECK(g.function({1, 1}).is_zero());
  CHECK(g.subgroup_generators.size() == 1);

  GroupFunction f(FiniteAbelianGroup({3, 2}));
  f[{2, 1}] = Cyclotomic(Rational(-5, 7));
  f[{0, 0}] = Cyclotomic(1);
  std::ostringstream os;
  write_group_function(os, f);
  std::istringstream back(os.str());
  auto r = read_group_input(back);
  for (std::int64_t i = 0; i < f.group.size(); ++i) CHECK(r.function.values[i] == f.values[i]);

  std::istringstream dup("group 2\nf 1 1\nf 1 2\n");
  CHECK_THROWS_AS(read_group_input(dup), std::invalid_argument);
  std::istringstream nogroup("f 1 1\n");
  CHECK_THROWS_AS(read_group_input(nogroup), std::invalid_argument);
  std::istringstream shortline("group 2 2\nf 1 5\n");
  CHECK_THROWS_AS(read_group_input(shortline), std::invalid_argument);
}

TEST_CASE("Kronecker symbol and Hilbert symbols") {
  CHECK(quad_char_eval(Integer(-4), Rational(3)) == -1);
  CHECK(quad_char_eval(Integer(8), Rational(7)) == 1);
  CHECK(quad_char_eval(Integer(1), Rational(-15, 4)) == 1);
  CHECK(quad_char_eval(Integer(-4), Rational(6)) == 0);
  for (long p : {3, 5, 7, 11, 13, 101})
    for (long d : {-8, -7, -4, -3, 5, 8, 12, 13, 21})
      if (d % p) CHECK(kronecker(Integer(d), Integer(p)) == euler_criterion(d, p));

  CHECK(hilbert_symbol(-1, -1, kInfinity) == -1);
  CHECK(hilbert_symbol(-1, -1, 2) == -1);
  CHECK(hilbert_symbol(2, 3, 3) == -1);
  CHECK(hilbert_symbol(2, 5, 5) == -1);
  CHECK(hilbert_symbol(5, 7, 3) == 1);
  // product formula over all places for random pairs
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> n(-60, 60), m(1, 30);
  for (int trial = 0; trial < 300; ++trial) {
    long a1 = n(rng), b1 = n(rng);
    if (!a1 || !b1) continue;
    Rational a(a1, m(rng)), b(b1, m(rng));
    a.canonicalize();
    b.canonicalize();
    std::set<long> primes{2};
    for (const Integer& z : {Integer(a.get_num()), Integer(a.get_den()), Integer(b.get_num()), Integer(b.get_den())}) {
      long x = std::labs(z.get_si());
      for (long p = 2; p <= x; ++p)
        if (x % p == 0 && is_prime(p)) primes.insert(p);
    }
    int prod = hilbert_symbol(a, b, kInfinity);
    for (long p : primes) prod *= hilbert_symbol(a, b, p);
    CHECK(prod == 1);
  }
}

TEST_CASE("class group sizes and discriminants") {
  CHECK(ClassGroup(parse_places("inf")).group().size() == 1);
  ClassGroup D2(parse_places("inf,2"));
  CHECK(D2.group().orders() == std::vector<int>{2, 2});
  CHECK(D2.discriminants() == std::vector<Integer>{1, -4, 8, -8});
  ClassGroup D23(parse_places("inf,2,3"));
  CHECK(D23.group().size() == 8);
  CHECK_THROWS_AS(parse_places("2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_places("inf,4"), std::invalid_argument);
  CHECK(format_places(parse_places("3,inf,2")) == "inf,2,3");

  for (const char* spec : {"inf", "inf,2", "inf,3", "inf,2,3", "inf,3,5", "inf,2,5,7"}) {
    auto S = parse_places(spec);
    ClassGroup D(S);
    long bound = 4;
    for (auto p : S)
      if (p != kInfinity) bound *= p;
    std::set<long> oracle;
    for (long d = -bound; d <= bound; ++d)
      if (d != 0 && fundamental(d) && supported_on(d, S)) oracle.insert(d);
    std::set<long> ours;
    for (const auto& d : D.discriminants()) ours.insert(d.get_si());
    CHECK(ours == oracle);
    CHECK(static_cast<std::int64_t>(oracle.size()) == D.group().size());
    // distinct characters, trivial exactly for d = 1, trivial on S-unit images
    std::set<Element> ks;
    for (const auto& d : D.discriminants()) {
      auto psi = D.character(d);
      ks.insert(psi.k);
      CHECK(psi.is_trivial() == (d == 1));
      for (const auto& t : sample_s_units(S)) CHECK(D.ambient_character(d, D.diagonal(t)) == 1);
    }
    CHECK(static_cast<std::int64_t>(ks.size()) == D.group().size());
  }
  CHECK_THROWS_AS(D2.character(Integer(-3)), std::invalid_argument);
}

TEST_CASE("projection and compatibility with Kronecker characters") {
  ClassGroup D2(parse_places("inf,2"));
  const auto& G = D2.group();
  CHECK(project_to_D(Rational(1), D2) == G.identity());
  auto minus = project_to_D(Rational(-1), D2);
  CHECK(minus != G.identity());
  for (std::size_t i = 0; i < minus.size(); ++i)
    if (minus[i]) CHECK(G.labels()[i] == "inf:sign");
  CHECK_THROWS_AS(project_to_D(Rational(3), D2), std::invalid_argument);

  for (const char* spec : {"inf,2", "inf,3", "inf,2,3", "inf,2,3,5", "inf,7,11"}) {
    ClassGroup D(parse_places(spec));
    for (const auto& d : D.discriminants()) {
      auto psi = D.character(d);
      for (const auto& t : sample_s_units(D.places())) {
        int k = quad_char_eval(d, t);
        if (k == 0) continue;
        auto val = psi(D.group(), project_to_D(t, D));
        CHECK(val == Cyclotomic(k));
      }
    }
  }
}

TEST_CASE("class representatives reduce back") {
  for (const char* spec : {"inf,2", "inf,2,3", "inf,5,13"}) {
    ClassGroup D(parse_places(spec));
    for (std::int64_t i = 0; i < D.group().size(); ++i) {
      auto x = D.group().element(i);
      CHECK(D.reduce(D.ambient(D.representative(x))) == x);
    }
  }
}
