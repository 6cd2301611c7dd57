#include "gl2/hecke.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gl2 {

LocalField::LocalField(std::int64_t q) : q_(q) {
  if (!is_prime(q)) throw std::invalid_argument("LocalField: q = " + std::to_string(q) + " is not a prime");
}

Cocharacter::Cocharacter(int a_, int b_) : a(a_), b(b_) {
  if (a < b) {
    throw std::invalid_argument("cocharacter (" + std::to_string(a) + ", " + std::to_string(b) + ") is not dominant");
  }
}

// --- HeckeElement -------------------------------------------------------

HeckeElement HeckeElement::basis(LocalField field, int a, int b) {
  HeckeElement h(field);
  h.add_term(Cocharacter(a, b), LaurentQ(1));
  return h;
}

LaurentQ HeckeElement::coefficient(const Cocharacter& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? LaurentQ() : it->second;
}

void HeckeElement::add_term(const Cocharacter& mu, const LaurentQ& c) {
  if (c.q() != 0 && c.q() != field_.q()) throw std::invalid_argument("coefficient ring does not match the base field");
  auto& slot = terms_[mu];
  slot += c;
  if (slot.is_zero()) terms_.erase(mu);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (field_ != o.field_) throw std::invalid_argument("Hecke elements over different fields");
  for (const auto& [mu, c] : o.terms_) add_term(mu, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  if (field_ != o.field_) throw std::invalid_argument("Hecke elements over different fields");
  for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
  return *this;
}

HeckeElement operator*(const LaurentQ& c, const HeckeElement& h) {
  HeckeElement out(h.field_);
  for (const auto& [mu, x] : h.terms_) out.add_term(mu, c * x);
  return out;
}

// --- SymLaurent ---------------------------------------------------------

SymLaurent::SymLaurent(std::map<Monomial, LaurentQ> terms) {
  for (auto& [m, c] : terms) {
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
  }
  for (const auto& [m, c] : terms_) {
    auto it = terms_.find({m.second, m.first});
    if (it == terms_.end() || it->second != c) {
      throw std::invalid_argument("SymLaurent: polynomial is not symmetric in Y1, Y2");
    }
  }
}

SymLaurent SymLaurent::orbit(int i, int j, const LaurentQ& c) {
  SymLaurent out;
  if (c.is_zero()) return out;
  out.terms_[{i, j}] = c;
  out.terms_[{j, i}] = c;
  return out;
}

LaurentQ SymLaurent::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? LaurentQ() : it->second;
}

SymLaurent& SymLaurent::operator+=(const SymLaurent& o) {
  for (const auto& [m, c] : o.terms_) {
    auto& slot = terms_[m];
    slot += c;
    if (slot.is_zero()) terms_.erase(m);
  }
  return *this;
}

SymLaurent& SymLaurent::operator-=(const SymLaurent& o) {
  for (const auto& [m, c] : o.terms_) {
    auto& slot = terms_[m];
    slot -= c;
    if (slot.is_zero()) terms_.erase(m);
  }
  return *this;
}

SymLaurent operator*(const SymLaurent& x, const SymLaurent& y) {
  std::map<Monomial, LaurentQ> out;
  for (const auto& [m1, c1] : x.terms_) {
    for (const auto& [m2, c2] : y.terms_) out[{m1.first + m2.first, m1.second + m2.second}] += c1 * c2;
  }
  return SymLaurent(std::move(out));
}

SymLaurent operator*(const LaurentQ& c, const SymLaurent& p) {
  std::map<Monomial, LaurentQ> out;
  for (const auto& [m, x] : p.terms_) out[m] = c * x;
  return SymLaurent(std::move(out));
}

LaurentQ SymLaurent::evaluate(const LaurentQ& y1, const LaurentQ& y2) const {
  LaurentQ acc;
  for (const auto& [m, c] : terms_) acc += c * pow(y1, m.first) * pow(y2, m.second);
  return acc;
}

ExactComplex SymLaurent::evaluate(const ExactComplex& y1, const ExactComplex& y2) const {
  ExactComplex acc;
  for (const auto& [m, c] : terms_) acc += ExactComplex(c) * pow(y1, m.first) * pow(y2, m.second);
  return acc;
}

std::complex<double> SymLaurent::evaluate(std::complex<double> y1, std::complex<double> y2) const {
  std::complex<double> acc = 0;
  for (const auto& [m, c] : terms_) acc += c.to_double() * std::pow(y1, m.first) * std::pow(y2, m.second);
  return acc;
}

namespace {

std::string monomial_text(int i, int j) {
  auto factor = [](const char* name, int e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return name;
    return std::string(name) + "^" + std::to_string(e);
  };
  std::string a = factor("Y1", i), b = factor("Y2", j);
  if (a.empty() && b.empty()) return "1";
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

}  // namespace

std::string SymLaurent::str() const {
  if (terms_.empty()) return "0";
  // Highest Y1 power first.
  std::vector<std::pair<Monomial, LaurentQ>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    if (x.first.first + x.first.second != y.first.first + y.first.second)
      return x.first.first + x.first.second > y.first.first + y.first.second;
    return x.first.first > y.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    std::string mono = monomial_text(m.first, m.second);
    std::string coef = c.str();
    const bool compound = !c.is_rational() && c.rational_part() != 0;
    const bool negative = !compound && coef[0] == '-';
    if (negative) coef.erase(0, 1);
    if (compound) coef = "(" + coef + ")";
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    if (mono == "1") {
      os << coef;
    } else if (coef == "1") {
      os << mono;
    } else {
      os << coef << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

// --- SatakeParameter ----------------------------------------------------

std::complex<double> SatakeParameter::alpha_numeric() const {
  if (auto* e = std::get_if<Exact>(&value)) return e->alpha.to_complex();
  return std::get<Numeric>(value).alpha;
}

std::complex<double> SatakeParameter::beta_numeric() const {
  if (auto* e = std::get_if<Exact>(&value)) return e->beta.to_complex();
  return std::get<Numeric>(value).beta;
}

bool SatakeParameter::is_unitary(double tol) const {
  if (auto* e = std::get_if<Exact>(&value)) return e->alpha.norm() == LaurentQ(1) && e->beta.norm() == LaurentQ(1);
  const auto& n = std::get<Numeric>(value);
  return std::abs(std::abs(n.alpha) - 1.0) <= tol && std::abs(std::abs(n.beta) - 1.0) <= tol;
}

// --- cosets -------------------------------------------------------------

std::vector<CosetRep> coset_decomposition(const LocalField& field, const Cocharacter& mu) {
  const std::int64_t p = field.q();
  const int a = mu.a, b = mu.b;
  std::vector<CosetRep> reps;
  Rational pb = int_power(p, b);
  for (int i = b; i <= a; ++i) {
    const int j = a + b - i;
    Integer range;
    mpz_ui_pow_ui(range.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(i - b));
    if (range > Integer(static_cast<long>(50'000'000))) throw std::length_error("coset_decomposition: too many cosets to list");
    const long n = range.get_si();
    for (long m = 0; m < n; ++m) {
      int vm = m == 0 ? kInfiniteValuation : valuation(Integer(m), p);
      int vu = vm == kInfiniteValuation ? kInfiniteValuation : b + vm;
      if (std::min({i, j, vu}) != b) continue;
      reps.push_back({i, j, pb * Rational(m)});
    }
  }
  return reps;
}

std::vector<CosetClass> coset_classes(const LocalField& field, const Cocharacter& mu) {
  const std::int64_t p = field.q();
  const int a = mu.a, b = mu.b;
  auto q_pow = [p](int k) {
    Integer z;
    mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return z;
  };
  std::vector<CosetClass> out;
  if (a == b) {
    out.push_back({b, b, kInfiniteValuation, Integer(1)});
    return out;
  }
  out.push_back({b, a, kInfiniteValuation, Integer(1)});
  for (int i = b + 1; i < a; ++i) out.push_back({i, a + b - i, b, q_pow(i - b) - q_pow(i - b - 1)});
  out.push_back({a, b, kInfiniteValuation, Integer(1)});
  for (int t = 0; t < a - b; ++t) out.push_back({a, b, b + t, q_pow(a - b - t) - q_pow(a - b - t - 1)});
  return out;
}

Integer coset_count(const LocalField& field, const Cocharacter& mu) {
  Integer total = 0;
  for (const auto& c : coset_classes(field, mu)) total += c.count;
  return total;
}

Cocharacter elementary_divisors(int val_a, int val_b, int val_c, int val_d, int val_det) {
  int m = std::min({val_a, val_b, val_c, val_d});
  if (m == kInfiniteValuation) throw std::domain_error("elementary_divisors: zero matrix");
  return Cocharacter(val_det - m, m);
}

namespace {

int add_val(int v, int shift) { return v == kInfiniteValuation ? v : v + shift; }

// Dominant cocharacter of y^-1 diag(p^c, p^d) for y = [[p^i, u], [0, p^j]].
Cocharacter translate_class(const CosetClass& y, int c, int d) {
  return elementary_divisors(c - y.i, add_val(y.u_valuation, d - y.i - y.j), kInfiniteValuation, d - y.j,
                             c + d - y.i - y.j);
}

}  // namespace

HeckeElement convolve(const HeckeElement& f, const HeckeElement& g) {
  if (f.field() != g.field()) throw std::invalid_argument("convolve: Hecke elements over different fields");
  HeckeElement out(f.field());
  if (f.is_zero() || g.is_zero()) return out;

  std::set<Cocharacter> targets;
  for (const auto& [mu, cf] : f.terms()) {
    for (const auto& [lambda, cg] : g.terms()) {
      const int total = mu.det_valuation() + lambda.det_valuation();
      const int max_span = mu.span() + lambda.span();
      for (int span = max_span; span >= 0; span -= 2) targets.insert(Cocharacter((total + span) / 2, (total - span) / 2));
    }
  }

  std::map<Cocharacter, std::vector<CosetClass>> classes;
  for (const auto& [mu, cf] : f.terms()) classes[mu] = coset_classes(f.field(), mu);

  // (f * g)(x) = sum over cosets yK in supp f of f(y) g(y^-1 x)
  for (const auto& target : targets) {
    LaurentQ value;
    for (const auto& [mu, cf] : f.terms()) {
      LaurentQ inner;
      for (const auto& cls : classes[mu]) {
        LaurentQ gv = g.coefficient(translate_class(cls, target.a, target.b));
        if (!gv.is_zero()) inner += LaurentQ(Rational(cls.count)) * gv;
      }
      value += cf * inner;
    }
    out.add_term(target, value);
  }
  return out;
}

SymLaurent satake_transform(const HeckeElement& h) {
  std::map<Monomial, LaurentQ> terms;
  const std::int64_t q = h.q();
  for (const auto& [mu, c] : h.terms()) {
    for (const auto& cls : coset_classes(h.field(), mu)) {
      // delta^{1/2}(diag(p^i, p^j)) = q^{-(i-j)/2} = v^{j-i}
      terms[{cls.i, cls.j}] += c * LaurentQ(Rational(cls.count)) * LaurentQ::v_power(q, cls.j - cls.i);
    }
  }
  return SymLaurent(std::move(terms));
}

HeckeElement inverse_satake(const SymLaurent& p, const LocalField& field) {
  HeckeElement out(field);
  SymLaurent rest = p;
  while (!rest.is_zero()) {
    // Leading monomial: largest span i - j; the transform is triangular for this order.
    const Monomial* lead = nullptr;
    for (const auto& [m, c] : rest.terms()) {
      if (m.first < m.second) continue;
      if (!lead || m.first - m.second > lead->first - lead->second) lead = &m;
    }
    const Cocharacter mu(lead->first, lead->second);
    const LaurentQ coeff = rest.coefficient(mu.a, mu.b) * LaurentQ::v_power(field.q(), -mu.span());
    out.add_term(mu, coeff);
    rest -= coeff * satake_transform(HeckeElement::basis(field, mu.a, mu.b));
  }
  return out;
}

ExactComplex spherical_trace(const HeckeElement& h, const ExactComplex& alpha, const ExactComplex& beta) {
  return satake_transform(h).evaluate(alpha, beta);
}

std::complex<double> spherical_trace(const HeckeElement& h, const SatakeParameter& c) {
  if (const auto* e = std::get_if<SatakeParameter::Exact>(&c.value)) return spherical_trace(h, e->alpha, e->beta).to_complex();
  return satake_transform(h).evaluate(c.alpha_numeric(), c.beta_numeric());
}

// --- text I/O -----------------------------------------------------------

namespace {

struct Header {
  std::int64_t q = 0;
  int k_min = 0;
};

bool next_content_line(std::istream& is, std::string& line) {
  while (std::getline(is, line)) {
    line = line.substr(0, line.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    return true;
  }
  return false;
}

Header read_header(std::istream& is) {
  std::string line;
  if (!next_content_line(is, line)) throw std::invalid_argument("missing header line 'q <q> kmin <k>'");
  std::istringstream ls(line);
  std::string kq, kk;
  Header h;
  if (!(ls >> kq >> h.q >> kk >> h.k_min) || kq != "q" || kk != "kmin") {
    throw std::invalid_argument("malformed header line '" + line + "'");
  }
  return h;
}

void write_coefficients(std::ostream& os, const LaurentQ& c) {
  os << to_string(c.rational_part());
  if (!c.is_rational()) os << ' ' << to_string(c.v_part());
}

LaurentQ read_coefficients(std::istringstream& ls, const Header& h) {
  std::vector<Rational> cs;
  std::string tok;
  while (ls >> tok) cs.push_back(parse_rational(tok));
  if (cs.empty()) throw std::invalid_argument("line without coefficients");
  return LaurentQ::from_coefficients(h.q, h.k_min, cs);
}

}  // namespace

void write_hecke(std::ostream& os, const HeckeElement& h) {
  os << "q " << h.q() << " kmin 0\n";
  for (const auto& [mu, c] : h.terms()) {
    os << mu.a << ' ' << mu.b << ' ';
    write_coefficients(os, c);
    os << '\n';
  }
}

HeckeElement read_hecke(std::istream& is) {
  Header hd = read_header(is);
  HeckeElement h{LocalField(hd.q)};
  std::set<Cocharacter> seen;
  std::string line;
  while (next_content_line(is, line)) {
    std::istringstream ls(line);
    int a = 0, b = 0;
    if (!(ls >> a >> b)) throw std::invalid_argument("malformed coset line '" + line + "'");
    Cocharacter mu(a, b);
    if (!seen.insert(mu).second) throw std::invalid_argument("duplicate double coset in '" + line + "'");
    h.add_term(mu, read_coefficients(ls, hd));
  }
  return h;
}

void write_sym_laurent(std::ostream& os, const SymLaurent& p, std::int64_t q) {
  os << "q " << q << " kmin 0\n";
  for (const auto& [m, c] : p.terms()) {
    if (m.first < m.second) continue;
    os << m.first << ' ' << m.second << ' ';
    write_coefficients(os, c);
    os << '\n';
  }
}

SymLaurent read_sym_laurent(std::istream& is, std::int64_t* q_out) {
  Header hd = read_header(is);
  if (q_out) *q_out = hd.q;
  SymLaurent out;
  std::set<Monomial> seen;
  std::string line;
  while (next_content_line(is, line)) {
    std::istringstream ls(line);
    int i = 0, j = 0;
    if (!(ls >> i >> j)) throw std::invalid_argument("malformed monomial line '" + line + "'");
    Monomial key{std::max(i, j), std::min(i, j)};
    if (!seen.insert(key).second) throw std::invalid_argument("duplicate monomial orbit in '" + line + "'");
    out += SymLaurent::orbit(i, j, read_coefficients(ls, hd));
  }
  return out;
}

std::string to_string(const HeckeElement& h) {
  if (h.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, c] : h.terms()) {
    if (!first) os << " + ";
    os << "(" << c << ")*[" << mu.a << "," << mu.b << "]";
    first = false;
  }
  return os.str();
}

}  // namespace gl2
