#include "gl2/global.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gl2/orbital.hpp"

namespace gl2 {

// --- profiles -------------------------------------------------------------

PiecewiseLinear::PiecewiseLinear(std::vector<Rational> x, std::vector<Rational> y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() != y_.size()) throw std::invalid_argument("profile needs one value per breakpoint");
  for (std::size_t i = 1; i < x_.size(); ++i)
    if (!(x_[i - 1] < x_[i])) throw std::invalid_argument("profile breakpoints must increase strictly");
}

PiecewiseLinear PiecewiseLinear::parse(const std::string& text) {
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream is(t);
  std::vector<Rational> x, y;
  std::string tok;
  while (is >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("profile entry '" + tok + "' is not x:y");
    x.push_back(parse_rational(tok.substr(0, colon)));
    y.push_back(parse_rational(tok.substr(colon + 1)));
  }
  return PiecewiseLinear(std::move(x), std::move(y));
}

bool PiecewiseLinear::is_zero() const {
  return std::all_of(y_.begin(), y_.end(), [](const Rational& v) { return v == 0; });
}

Rational PiecewiseLinear::operator()(const Rational& x) const {
  if (x_.empty() || x < x_.front() || x > x_.back()) return 0;
  for (std::size_t i = 1; i < x_.size(); ++i) {
    if (x <= x_[i]) {
      Rational s = (x - x_[i - 1]) / (x_[i] - x_[i - 1]);
      return y_[i - 1] + s * (y_[i] - y_[i - 1]);
    }
  }
  return y_.back();
}

Rational PiecewiseLinear::mass() const {
  Rational m = 0;
  for (std::size_t i = 1; i < x_.size(); ++i) m += (x_[i] - x_[i - 1]) * (y_[i] + y_[i - 1]) / 2;
  return m;
}

PiecewiseLinear PiecewiseLinear::scaled(const Rational& c) const {
  auto y = y_;
  for (auto& v : y) v *= c;
  return PiecewiseLinear(x_, std::move(y));
}

std::string PiecewiseLinear::str() const {
  std::string s;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (i) s += ' ';
    s += to_string(x_[i]) + ":" + to_string(y_[i]);
  }
  return s;
}

ArchimedeanFactor ArchimedeanFactor::even(const PiecewiseLinear& profile) { return {profile, profile, profile, profile}; }

ArchimedeanFactor ArchimedeanFactor::bump() {
  return even(PiecewiseLinear({Rational(-1), Rational(0), Rational(1)}, {Rational(0), Rational(1), Rational(0)}));
}

// --- test functions ------------------------------------------------------

namespace {

void check_rational(const HeckeElement& h, Place p) {
  if (h.q() != p) throw std::invalid_argument("local factor at " + std::to_string(p) + " lives over q = " + std::to_string(h.q()));
  for (const auto& [mu, c] : h.terms())
    if (!c.is_rational()) throw std::invalid_argument("global test functions need rational local coefficients");
}

Rational as_rational(const LaurentQ& x) {
  if (!x.is_rational()) throw std::domain_error("value " + x.str() + " is not rational");
  return x.rational_part();
}

}  // namespace

GlobalTestFunction::GlobalTestFunction(std::vector<Place> S) : places_(std::move(S)) {
  std::sort(places_.begin(), places_.end());
  if (places_.empty() || places_.front() != kInfinity) throw std::invalid_argument("place set must contain inf");
}

GlobalTestFunction::GlobalTestFunction(std::vector<Place> S, FactorizableTerm term) : GlobalTestFunction(std::move(S)) {
  add_term(std::move(term));
}

void GlobalTestFunction::add_term(FactorizableTerm term) {
  for (const auto& [p, h] : term.local) {
    if (std::find(places_.begin(), places_.end(), p) == places_.end() || p == kInfinity) {
      throw std::invalid_argument("local factor at " + std::to_string(p) + " outside the finite places of S");
    }
    check_rational(h, p);
  }
  terms_.push_back(std::move(term));
}

HeckeElement GlobalTestFunction::local(const FactorizableTerm& t, Place p) const {
  auto it = t.local.find(p);
  return it == t.local.end() ? HeckeElement::unit(LocalField(p)) : it->second;
}

GlobalTestFunction operator+(const GlobalTestFunction& f, const GlobalTestFunction& g) {
  if (f.places_ != g.places_) throw std::invalid_argument("summands must share the place set");
  GlobalTestFunction h = f;
  for (const auto& t : g.terms_) h.terms_.push_back(t);
  return h;
}

GlobalTestFunction GlobalTestFunction::scaled(const Rational& c) const {
  GlobalTestFunction h = *this;
  for (auto& t : h.terms_) {
    t.arch.f_pos = t.arch.f_pos.scaled(c);
    t.arch.f_neg = t.arch.f_neg.scaled(c);
    t.arch.phi_pos = t.arch.phi_pos.scaled(c);
    t.arch.phi_neg = t.arch.phi_neg.scaled(c);
  }
  return h;
}

// --- local pieces ------------------------------------------------------------

Rational pgl_torus_value(const HeckeElement& h, int e) {
  // diag(p^{e+k}, p^k) lies in the coset of span |e|, one k per such coset
  Rational acc = 0;
  for (const auto& [mu, c] : h.terms())
    if (mu.span() == std::abs(e)) acc += as_rational(c);
  return acc;
}

Rational pgl_phi_value(const HeckeElement& h, int e) {
  const std::int64_t p = h.q();
  std::set<int> ks;
  for (const auto& [mu, c] : h.terms()) {
    int n = mu.det_valuation() - e;
    if (n % 2 == 0) ks.insert(n / 2);
  }
  Rational acc = 0;
  for (int k : ks) {
    auto a = SplitClass::from_entries(h.field(), int_power(p, e + k), int_power(p, k));
    acc += as_rational(phi_transform(h, a));
  }
  return acc;
}

std::vector<int> pgl_torus_range(const HeckeElement& h) {
  int span = -1;
  for (const auto& [mu, c] : h.terms()) span = std::max(span, mu.span());
  std::vector<int> out;
  for (int e = -span; e <= span; ++e) out.push_back(e);
  return out;
}

std::vector<std::pair<Rational, Rational>> unit_square_classes(Place p) {
  if (p == 2) return {{1, Rational(1, 4)}, {3, Rational(1, 4)}, {5, Rational(1, 4)}, {7, Rational(1, 4)}};
  if (p == kInfinity || !is_prime(p)) throw std::invalid_argument("unit square classes need a finite prime");
  long n = 2;
  Integer pz(static_cast<long>(p));
  while (mpz_legendre(Integer(n).get_mpz_t(), pz.get_mpz_t()) != -1) ++n;
  return {{1, Rational(1, 2)}, {Rational(n), Rational(1, 2)}};
}

Rational unit_average(const Integer& d, Place p, int e) {
  Rational acc = 0;
  const Rational pe = int_power(p, e);
  for (const auto& [u, vol] : unit_square_classes(p)) acc += vol * hilbert_symbol(Rational(d), pe * u, p);
  return acc;
}

// --- global terms -------------------------------------------------------------

namespace {

std::vector<Place> finite_places(const GlobalTestFunction& f) {
  std::vector<Place> out;
  for (auto v : f.places())
    if (v != kInfinity) out.push_back(v);
  return out;
}

struct LocalTables {
  std::vector<std::vector<int>> ranges;  // per finite place
  std::vector<std::map<int, Rational>> f, phi;
};

LocalTables tables(const GlobalTestFunction& f, const FactorizableTerm& term) {
  LocalTables t;
  for (auto p : finite_places(f)) {
    auto h = f.local(term, p);
    auto range = pgl_torus_range(h);
    std::map<int, Rational> fv, pv;
    for (int e : range) {
      fv[e] = pgl_torus_value(h, e);
      pv[e] = pgl_phi_value(h, e);
    }
    t.ranges.push_back(range);
    t.f.push_back(std::move(fv));
    t.phi.push_back(std::move(pv));
  }
  return t;
}

// Calls visit(exponents) for every tuple in the product of the ranges.
template <class Visit>
void for_each_tuple(const std::vector<std::vector<int>>& ranges, Visit visit) {
  for (const auto& r : ranges)
    if (r.empty()) return;
  std::vector<std::size_t> idx(ranges.size(), 0);
  std::vector<int> e(ranges.size());
  while (true) {
    for (std::size_t i = 0; i < ranges.size(); ++i) e[i] = ranges[i][idx[i]];
    visit(e);
    std::size_t i = 0;
    while (i < ranges.size() && ++idx[i] == ranges[i].size()) idx[i++] = 0;
    if (i == ranges.size()) return;
  }
}

}  // namespace

std::vector<TorusPoint> torus_support(const GlobalTestFunction& f) {
  const auto fin = finite_places(f);
  std::map<Rational, std::pair<Rational, Rational>> acc;
  for (const auto& term : f.terms()) {
    auto tab = tables(f, term);
    for (int sign : {1, -1}) {
      Rational mf = term.arch.f_mass(sign), mp = term.arch.phi_mass(sign);
      if (mf == 0 && mp == 0) continue;
      for_each_tuple(tab.ranges, [&](const std::vector<int>& e) {
        Rational t = sign, fv = mf, pv = mp;
        for (std::size_t i = 0; i < fin.size(); ++i) {
          t *= int_power(fin[i], e[i]);
          fv *= tab.f[i].at(e[i]);
          pv *= tab.phi[i].at(e[i]);
        }
        if (fv == 0 && pv == 0) return;
        auto& slot = acc[t];
        slot.first += fv;
        slot.second += pv;
      });
    }
  }
  std::vector<TorusPoint> out;
  for (const auto& [t, v] : acc)
    if (v.first != 0 || v.second != 0) out.push_back({t, v.first, v.second});
  return out;
}

SpectralReport one_dim_spectral(const GlobalTestFunction& f, const NormalizationConstants& c) {
  const auto fin = finite_places(f);
  ClassGroup D(f.places());
  SpectralReport rep;
  for (std::size_t k = 0; k < f.terms().size(); ++k) {
    const auto& term = f.terms()[k];
    for (const auto& d : D.discriminants()) {
      CharacterRow row;
      row.term = static_cast<int>(k);
      row.d = d;
      row.archimedean = term.arch.f_mass(1) + hilbert_symbol(Rational(d), Rational(-1), kInfinity) * term.arch.f_mass(-1);
      row.product = row.archimedean / c.vol_gbar;
      for (auto p : fin) {
        Rational local = 0;
        const auto h = f.local(term, p);
        for (const auto& [mu, coef] : h.terms()) {
          Rational vol(coset_count(LocalField(p), mu));
          local += as_rational(coef) * vol * unit_average(d, p, mu.det_valuation());
        }
        row.local.push_back(local);
        row.product *= local;
      }
      rep.total += row.product;
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

Rational one_dim_geometric(const GlobalTestFunction& f, const NormalizationConstants& c) {
  Rational acc = 0;
  for (const auto& pt : torus_support(f)) acc += pt.f_value;
  return c.vol_k * c.vol_k / c.vol_gbar * acc;
}

CartanReport cartan_discrepancy(const GlobalTestFunction& f) {
  CartanReport rep;
  const auto fin = finite_places(f);
  for (std::size_t k = 0; k < f.terms().size(); ++k) {
    for (auto p : fin) {
      CartanTotal tot;
      tot.term = static_cast<int>(k);
      tot.place = p;
      const auto h = f.local(f.terms()[k], p);
      for (const auto& [mu, coef] : h.terms()) {
        CartanRow row;
        row.term = static_cast<int>(k);
        row.place = p;
        row.coset = mu;
        row.coefficient = as_rational(coef);
        row.group_volume = coset_count(LocalField(p), mu);
        row.torus_points = mu.a == mu.b ? 1 : 2;
        row.ratio = Rational(row.group_volume) / row.torus_points;
        row.ratio.canonicalize();
        tot.group_integral += row.coefficient * Rational(row.group_volume);
        tot.torus_form += row.coefficient * row.torus_points;
        rep.rows.push_back(std::move(row));
      }
      rep.totals.push_back(tot);
    }
  }
  return rep;
}

SpectralReport residual_spectral(const GlobalTestFunction& f) {
  const auto fin = finite_places(f);
  ClassGroup D(f.places());
  SpectralReport rep;
  for (std::size_t k = 0; k < f.terms().size(); ++k) {
    const auto& term = f.terms()[k];
    auto tab = tables(f, term);
    for (const auto& d : D.discriminants()) {
      CharacterRow row;
      row.term = static_cast<int>(k);
      row.d = d;
      row.archimedean = term.arch.phi_mass(1) + hilbert_symbol(Rational(d), Rational(-1), kInfinity) * term.arch.phi_mass(-1);
      row.product = row.archimedean;
      for (std::size_t i = 0; i < fin.size(); ++i) {
        Rational local = 0;
        for (const auto& [e, phi] : tab.phi[i])
          if (phi != 0) local += phi * unit_average(d, fin[i], e);
        row.local.push_back(local);
        row.product *= local;
      }
      rep.total += row.product;
      rep.rows.push_back(std::move(row));
    }
  }
  rep.total *= Rational(-1, 4);
  return rep;
}

Rational residual_geometric(const GlobalTestFunction& f) {
  Rational acc = 0;
  for (const auto& pt : torus_support(f)) acc += pt.phi_value;
  return Rational(-1, 4) * acc;
}

GroupFunction residual_class_function(const GlobalTestFunction& f, const ClassGroup& D) {
  if (D.places() != f.places()) throw std::invalid_argument("class group and test function use different S");
  const auto fin = finite_places(f);
  // unit-class tuples u at the finite places, with their volume
  std::vector<std::vector<int>> ranges;
  std::vector<std::vector<std::pair<Rational, Rational>>> classes;
  for (auto p : fin) {
    classes.push_back(unit_square_classes(p));
    std::vector<int> r;
    for (std::size_t i = 0; i < classes.back().size(); ++i) r.push_back(static_cast<int>(i));
    ranges.push_back(r);
  }
  std::vector<Rational> value(static_cast<std::size_t>(D.group().size()));
  for (const auto& pt : torus_support(f)) {
    if (pt.phi_value == 0) continue;
    // idele t r u with r > 0 at infinity; Phi_p depends only on valuations
    for_each_tuple(ranges, [&](const std::vector<int>& pick) {
      std::vector<Rational> idele;
      Rational vol = 1;
      std::size_t i = 0;
      for (auto v : D.places()) {
        if (v == kInfinity) {
          idele.push_back(pt.t < 0 ? Rational(-1) : Rational(1));
          continue;
        }
        const auto& [u, w] = classes[i][static_cast<std::size_t>(pick[i])];
        idele.push_back(pt.t * u);
        vol *= w;
        ++i;
      }
      auto x = D.reduce(D.ambient(idele));
      value[static_cast<std::size_t>(D.group().index(x))] += vol * pt.phi_value;
    });
  }
  GroupFunction F(D.group());
  for (std::size_t i = 0; i < value.size(); ++i) F.values[i] = Cyclotomic(value[i]);
  return F;
}

CorrectionReport correction_term(const GlobalTestFunction& f, const NormalizationConstants& c) {
  CorrectionReport rep;
  const Rational scale = c.vol_k * c.vol_k / c.vol_gbar;
  for (const auto& pt : torus_support(f)) {
    CorrectionRow row{pt.t, scale * pt.f_value, Rational(-1, 4) * pt.phi_value, 0};
    row.total = row.one_dim + row.residual;
    rep.total += row.total;
    rep.rows.push_back(row);
  }
  return rep;
}

// --- configuration ----------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

HeckeElement local_from_spec(const std::string& value, Place p, const std::string& base_dir) {
  LocalField field(p);
  if (value == "unit") return HeckeElement::unit(field);
  if (value == "T") return HeckeElement::hecke_operator(field);
  static const std::regex pair(R"((-?\d+),(-?\d+))");
  std::smatch m;
  if (std::regex_match(value, m, pair)) return HeckeElement::basis(field, std::stoi(m[1]), std::stoi(m[2]));
  std::filesystem::path path(value);
  if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open Hecke element file " + path.string());
  auto h = read_hecke(in);
  if (h.q() != p) throw std::invalid_argument(path.string() + " has q = " + std::to_string(h.q()) + ", expected " + std::to_string(p));
  return h;
}

}  // namespace

GlobalConfig parse_global_config(std::istream& is, const std::string& base_dir) {
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (!kv.emplace(key, value).second) throw std::invalid_argument("config line " + std::to_string(lineno) + ": duplicate key " + key);
  }

  static const std::set<std::string> plain{"places", "vol_gbar", "vol_k", "arch_f", "arch_f_neg", "arch_phi", "arch_phi_neg"};
  for (const auto& [k, v] : kv)
    if (!plain.count(k) && k.rfind("hecke.", 0) != 0) throw std::invalid_argument("unknown config key '" + k + "'");

  GlobalConfig cfg;
  auto get = [&](const std::string& k, const std::string& def) {
    auto it = kv.find(k);
    return it == kv.end() ? def : it->second;
  };
  auto S = parse_places(get("places", "inf"));
  cfg.constants.vol_gbar = parse_rational(get("vol_gbar", "1"));
  cfg.constants.vol_k = parse_rational(get("vol_k", "1"));
  if (cfg.constants.vol_gbar <= 0 || cfg.constants.vol_k <= 0) throw std::invalid_argument("volumes must be positive");

  FactorizableTerm term;
  for (const auto& [k, v] : kv) {
    if (k.rfind("hecke.", 0) != 0) continue;
    std::string ptext = k.substr(6);
    Place p = 0;
    try {
      std::size_t used = 0;
      p = std::stoll(ptext, &used);
      if (used != ptext.size()) p = 0;
    } catch (const std::exception&) {
      p = 0;
    }
    if (p == 0 || std::find(S.begin(), S.end(), p) == S.end()) throw std::invalid_argument("config key " + k + " names a prime outside places");
    term.local.emplace(p, local_from_spec(v, p, base_dir));
  }
  std::string f = get("arch_f", "-1:0 0:1 1:0");
  std::string phi = get("arch_phi", f);
  term.arch.f_pos = PiecewiseLinear::parse(f);
  term.arch.f_neg = PiecewiseLinear::parse(get("arch_f_neg", f));
  term.arch.phi_pos = PiecewiseLinear::parse(phi);
  term.arch.phi_neg = PiecewiseLinear::parse(get("arch_phi_neg", phi));
  cfg.function = GlobalTestFunction(S, std::move(term));
  return cfg;
}

}  // namespace gl2
