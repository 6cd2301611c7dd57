#include "gl2/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gl2/basic_functions.hpp"
#include "gl2/global.hpp"
#include "gl2/hecke.hpp"
#include "gl2/intertwining.hpp"
#include "gl2/orbital.hpp"
#include "gl2/poisson.hpp"
#include "gl2/spectral.hpp"

namespace gl2::cli {

namespace {

// Bad input attributable to one flag.
struct UsageError : std::runtime_error {
  UsageError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

// Verification failure; the message is the first counterexample.
struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string out_path;
  int float_digits = -1;
  int jobs = 1;

  std::int64_t q = 0;
  std::vector<std::string> in;
  std::string group;
  std::string f;
  std::string gamma;
  std::string r = "std";
  std::string N;
  std::string fit = "1,3";
  std::string config;
  std::string places = "inf,2";
  std::string alpha = "2";
  std::string beta = "1/3";
  std::string s;
  std::string norm = "chebyshev";
  std::string method = "log";
  int depth = -1;
};

// --- rendering -------------------------------------------------------------

std::string decimal(const Rational& x, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational ax = abs(x) * scale;
  // round half up on |x|
  Integer n = (ax.get_num() * 2 + ax.get_den()) / (ax.get_den() * 2);
  std::string s = n.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return (x < 0 && n != 0 ? "-" : "") + s;
}

struct Render {
  int digits = -1;

  std::string operator()(const Rational& x) const {
    if (digits < 0) {
      Rational c = x;
      c.canonicalize();
      return c.get_str();
    }
    return decimal(x, digits);
  }
  std::string operator()(const LaurentQ& x) const {
    if (digits < 0 || x.is_rational()) return digits < 0 ? x.str() : (*this)(x.rational_part());
    std::ostringstream os;
    os << std::setprecision(digits) << x.to_double();
    return os.str();
  }
  std::string operator()(double x) const {
    std::ostringstream os;
    os << std::setprecision(digits < 0 ? 12 : digits) << x;
    return os.str();
  }
  std::string operator()(const Cyclotomic& z) const {
    if (z.is_rational()) return (*this)(z.to_rational());
    if (digits < 0) return z.str();
    std::ostringstream os;
    os << std::setprecision(digits) << z.to_complex();
    return os.str();
  }
};

// --- input -----------------------------------------------------------------

std::vector<int> int_list(const std::string& flag, const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  static const std::regex integer(R"(\s*-?\d+\s*)");
  while (std::getline(ss, item, ',')) {
    if (!std::regex_match(item, integer)) throw UsageError(flag, "expected comma-separated integers, got '" + text + "'");
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw UsageError(flag, "empty list");
  return out;
}

std::vector<double> real_list(const std::string& flag, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag, "expected comma-separated numbers, got '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError(flag, "empty list");
  return out;
}

LocalField field_of(const Options& o) {
  if (o.q == 0) throw UsageError("--q", "required");
  try {
    return LocalField(o.q);
  } catch (const std::exception& e) {
    throw UsageError("--q", e.what());
  }
}

// A file in the hecke text format, or `unit`, `T`, `a,b` for a basis element over --q.
HeckeElement load_hecke(const Options& o, const std::string& spec) {
  static const std::regex pair(R"((-?\d+),(-?\d+))");
  std::smatch m;
  if (spec == "unit") return HeckeElement::unit(field_of(o));
  if (spec == "T") return HeckeElement::hecke_operator(field_of(o));
  if (std::regex_match(spec, m, pair)) {
    try {
      return HeckeElement::basis(field_of(o), std::stoi(m[1]), std::stoi(m[2]));
    } catch (const std::invalid_argument& e) {
      throw UsageError("--in", e.what());
    }
  }
  std::ifstream in(spec);
  if (!in) throw UsageError("--in", "cannot open '" + spec + "'");
  try {
    auto h = read_hecke(in);
    if (o.q != 0 && h.q() != o.q)
      throw UsageError("--q", std::to_string(o.q) + " does not match q " + std::to_string(h.q()) + " of " + spec);
    return h;
  } catch (const std::invalid_argument& e) {
    throw UsageError("--in", spec + ": " + e.what());
  }
}

HeckeElement single_input(const Options& o) {
  if (o.in.size() != 1) throw UsageError("--in", "expected exactly one input");
  return load_hecke(o, o.in.front());
}

SplitClass gamma_of(const Options& o, const LocalField& field) {
  if (o.gamma.empty()) throw UsageError("--gamma", "required (e1,e2[,d])");
  auto v = int_list("--gamma", o.gamma);
  if (v.size() < 2 || v.size() > 3) throw UsageError("--gamma", "expected e1,e2 or e1,e2,d");
  try {
    return v.size() == 2 ? SplitClass::from_valuations(field, v[0], v[1])
                         : SplitClass::from_valuations(field, v[0], v[1], v[2]);
  } catch (const std::exception& e) {
    throw UsageError("--gamma", e.what());
  }
}

RepSpec rep_of(const Options& o) {
  try {
    return RepSpec::parse(o.r);
  } catch (const std::exception& e) {
    throw UsageError("--r", e.what());
  }
}

int single_int(const std::string& flag, const std::string& text, int fallback) {
  if (text.empty()) return fallback;
  auto v = int_list(flag, text);
  if (v.size() != 1) throw UsageError(flag, "expected one integer");
  return v.front();
}

ExactComplex complex_of(const std::string& flag, const std::string& text) {
  try {
    return ExactComplex::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(flag, e.what());
  }
}

GlobalConfig config_of(const Options& o) {
  if (o.config.empty()) throw UsageError("--config", "required");
  std::ifstream in(o.config);
  if (!in) throw UsageError("--config", "cannot open '" + o.config + "'");
  auto base = std::filesystem::path(o.config).parent_path().string();
  try {
    return parse_global_config(in, base.empty() ? "." : base);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--config", e.what());
  }
}

// --- subcommands -------------------------------------------------------------

void cmd_satake(const Options& o, std::ostream& os, const Render&) {
  auto h = single_input(o);
  auto S = satake_transform(h);
  os << "q: " << h.q() << '\n';
  os << "h: " << to_string(h) << '\n';
  os << "satake: " << S.str() << '\n';
  auto back = inverse_satake(S, h.field());
  if (back != h) throw Mismatch("inverse_satake(satake(h)) = " + to_string(back) + " != h");
  os << "round trip: ok\n";
}

void cmd_convolve(const Options& o, std::ostream& os, const Render&) {
  if (o.in.size() != 2) throw UsageError("--in", "convolve needs two inputs");
  auto f = load_hecke(o, o.in[0]);
  auto g = load_hecke(o, o.in[1]);
  if (f.field() != g.field()) throw UsageError("--in", "inputs live over different q");
  auto fg = convolve(f, g);
  write_hecke(os, fg);
  auto lhs = satake_transform(fg), rhs = satake_transform(f) * satake_transform(g);
  if (lhs != rhs) throw Mismatch("S(f*g) = " + lhs.str() + " but S(f)S(g) = " + rhs.str());
  os << "# satake(f*g) = satake(f)*satake(g): ok\n";
}

void cmd_basic_fn(const Options& o, std::ostream& os, const Render&) {
  auto field = field_of(o);
  auto r = rep_of(o);
  int N = single_int("--N", o.N, 6);
  if (N < 0) throw UsageError("--N", "must be >= 0");
  os << "r: " << o.r << " (dim " << r.dimension() << ")\nq: " << field.q() << '\n';
  for (int n = 0; n <= N; ++n) {
    auto h = basic_coeff(r, n, field);
    os << "f[" << n << "] = " << to_string(h) << '\n';
    if (satake_transform(h) != symn_trace(r, n))
      throw Mismatch("satake(f[" + std::to_string(n) + "]) differs from tr Sym^" + std::to_string(n) + " r");
  }
}

void cmd_l_factor(const Options& o, std::ostream& os, const Render&) {
  auto field = field_of(o);
  auto r = rep_of(o);
  int N = single_int("--N", o.N, 12);
  if (N < 0) throw UsageError("--N", "must be >= 0");
  auto alpha = complex_of("--alpha", o.alpha), beta = complex_of("--beta", o.beta);
  auto L = local_l_factor(r, alpha, beta);
  os << "r: " << o.r << "\nq: " << field.q() << "\nalpha: " << alpha << "\nbeta: " << beta << '\n';
  os << "L(t):\n";
  write_rational_function(os, L);
  auto [traces, expansion] = truncated_basic_identity(r, alpha, beta, N, field);
  os << "traces: " << format_terms(traces.coefficients()) << '\n';
  os << "expansion: " << format_terms(expansion.coefficients()) << '\n';
  for (int n = 0; n <= N; ++n)
    if (traces[n] != expansion[n])
      throw Mismatch("t^" + std::to_string(n) + ": trace " + traces[n].str() + " vs L coefficient " + expansion[n].str());
  os << "identity: ok through t^" << N << '\n';
}

void cmd_orbital(const Options& o, std::ostream& os, const Render& R) {
  auto h = single_input(o);
  auto g = gamma_of(o, h.field());
  auto value = split_orbital(h, g);
  int b_min = 0;
  bool first = true;
  for (const auto& [mu, c] : h.terms()) {
    b_min = first ? mu.b : std::min(b_min, mu.b);
    first = false;
  }
  int depth = o.depth >= 0 ? o.depth : std::max(0, g.d() - b_min);
  os << "gamma: " << g.str() << '\n';
  os << "orbital: " << R(value) << '\n';
  auto oracle = tree_orbital_oracle(h, g, depth, o.jobs);
  os << "oracle: " << R(oracle.value) << " (depth " << oracle.depth << ", " << oracle.terms << " terms"
     << (oracle.stabilized ? ", stabilized" : ", not stabilized") << ")\n";
  if (oracle.stabilized && oracle.value != value)
    throw Mismatch("closed form " + value.str() + " vs tree oracle " + oracle.value.str() + " at " + g.str());
  if (!oracle.stabilized) os << "note: oracle depth too small to certify\n";
}

void cmd_orbital_zeta(const Options& o, std::ostream& os, const Render&) {
  auto field = field_of(o);
  auto g = gamma_of(o, field);
  auto r = rep_of(o);
  int N = single_int("--N", o.N, 12);
  auto fit = int_list("--fit", o.fit);
  if (fit.size() != 2 || fit[0] < 0 || fit[1] < 0) throw UsageError("--fit", "expected num_degree,den_degree");
  const int window = fit[0] + fit[1] + 1;
  if (N + 1 <= window) throw UsageError("--N", "series too short for --fit " + o.fit);
  auto z = orbital_zeta(g, r, N);
  os << "gamma: " << g.str() << "\nr: " << o.r << '\n';
  write_series(os, z);
  auto rec = rational_reconstruct(z, fit[0], fit[1], N + 1 - window);
  if (!rec.ok()) throw Mismatch("no certified rational function: " + rec.reason);
  write_rational_function(os, *rec.function);
  os << "certified: " << rec.certified << " coefficients beyond the " << rec.fitted << "-term fit\n";
}

void cmd_phi_check(const Options& o, std::ostream& os, const Render& R) {
  auto h = single_input(o);
  auto a = gamma_of(o, h.field());
  if (!a.is_regular()) throw UsageError("--gamma", "needs a regular class");
  auto phi = phi_transform(h, a);
  auto orb = split_orbital(h, a);
  auto H = a.H();
  auto k = v_exponent(H, h.q());
  if (!k || *k % 2 != 0) throw Mismatch("H(a) = " + H.str() + " is not an even power of v");
  auto rhs = LaurentQ::v_power(h.q(), *k / 2) * orb;
  os << "a: " << a.str() << "\nH(a): " << R(H) << "\nphi: " << R(phi) << "\norbital: " << R(orb)
     << "\nH^(1/2)*orbital: " << R(rhs) << '\n';
  auto kappa = measured_phi_exponent(h, a);
  os << "measured exponent: " << (kappa ? R(*kappa) : std::string("undetermined")) << '\n';
  if (phi != rhs) throw Mismatch("phi = " + phi.str() + " but H^(1/2) f_G = " + rhs.str() + " at " + a.str());
}

void cmd_poisson(const Options& o, std::ostream& os, const Render& R) {
  if (o.f.empty()) throw UsageError("--f", "required");
  std::ifstream file(o.f);
  if (!file) throw UsageError("--f", "cannot open '" + o.f + "'");
  std::stringstream text;
  text << file.rdbuf();
  std::string body = text.str();
  static const std::regex has_group(R"((^|\n)\s*group\b)");
  if (!o.group.empty()) {
    auto orders = int_list("--group", o.group);
    std::string line = "group";
    for (int n : orders) line += " " + std::to_string(n);
    if (!std::regex_search(body, has_group)) body = line + "\n" + body;
    else {
      std::istringstream probe(body);
      auto declared = read_group_input(probe).group.orders();
      if (declared != std::vector<int>(orders.begin(), orders.end())) throw UsageError("--group", "disagrees with " + o.f);
    }
  }
  GroupInput in;
  try {
    std::istringstream is(body);
    in = read_group_input(is);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--f", e.what());
  }
  auto H = Subgroup::generated(in.group, in.subgroup_generators);
  auto res = poisson_check(in.group, H, in.function);
  os << "group: |G| = " << in.group.size() << ", |H| = " << H.size() << '\n';
  os << "lhs: " << R(res.lhs) << "\nrhs: " << R(res.rhs) << '\n';
  if (!res.equal) throw Mismatch("sum over H " + res.lhs.str() + " != dual side " + res.rhs.str());
  os << "equal: yes\n";
}

void cmd_class_group(const Options& o, std::ostream& os, const Render&) {
  std::vector<Place> S;
  try {
    S = parse_places(o.places);
  } catch (const std::exception& e) {
    throw UsageError("--places", e.what());
  }
  std::optional<ClassGroup> D;
  try {
    D.emplace(S);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--places", e.what());
  }
  const auto& G = D->group();
  os << "S: " << format_places(S) << "\nambient: (Z/2)^" << D->ambient_dimension() << "\nD_S: order " << G.size()
     << ", cyclic orders";
  for (int n : G.orders()) os << ' ' << n;
  os << '\n';
  auto ds = D->discriminants();
  if (static_cast<std::int64_t>(ds.size()) != G.size())
    throw Mismatch(std::to_string(ds.size()) + " discriminants for a group of order " + std::to_string(G.size()));
  os << "class representatives:\n";
  for (std::int64_t i = 0; i < G.size(); ++i) {
    auto x = G.element(i);
    os << "  " << G.format(x) << " :";
    for (const auto& r : D->representative(x)) os << ' ' << r.get_str();
    os << '\n';
  }
  os << "characters (d: values on the representatives):\n";
  for (const auto& d : ds) {
    auto psi = D->character(d);
    os << "  " << d.get_str() << ':';
    for (std::int64_t i = 0; i < G.size(); ++i) os << ' ' << psi(G, G.element(i)).str();
    os << '\n';
  }
}

void cmd_assemble(const Options& o, std::ostream& os, const Render& R) {
  auto cfg = config_of(o);
  const auto& f = cfg.function;
  os << "places: " << format_places(f.places()) << "\nvol_k: " << R(cfg.constants.vol_k)
     << "\nvol_gbar: " << R(cfg.constants.vol_gbar) << '\n';
  os << "torus support (t, f, Phi):\n";
  for (const auto& pt : torus_support(f)) os << "  " << R(pt.t) << ' ' << R(pt.f_value) << ' ' << R(pt.phi_value) << '\n';

  auto print_rows = [&](const SpectralReport& rep) {
    for (const auto& row : rep.rows) {
      os << "  d = " << row.d.get_str() << ": inf " << R(row.archimedean);
      for (const auto& x : row.local) os << " * " << R(x);
      os << " = " << R(row.product) << '\n';
    }
  };
  auto one = one_dim_spectral(f, cfg.constants);
  auto one_geo = one_dim_geometric(f, cfg.constants);
  os << "one-dimensional spectral:\n";
  print_rows(one);
  os << "one-dimensional spectral total: " << R(one.total) << "\none-dimensional geometric total: " << R(one_geo) << '\n';
  if (one.total != one_geo) os << "note: the two one-dimensional totals differ (see cartan-report)\n";

  auto res = residual_spectral(f);
  auto res_geo = residual_geometric(f);
  os << "residual spectral (rows before the factor -1/4):\n";
  print_rows(res);
  os << "residual spectral total: " << R(res.total) << "\nresidual geometric total: " << R(res_geo) << '\n';
  if (res.total != res_geo) throw Mismatch("residual spectral " + R(res.total) + " != geometric " + R(res_geo));

  ClassGroup D(f.places());
  auto F = residual_class_function(f, D);
  auto pr = poisson_check(D.group(), Subgroup::generated(D.group(), {}), F);
  os << "Poisson on D_S: F(0) = " << R(pr.lhs) << ", dual side " << R(pr.rhs) << '\n';
  if (!pr.equal) throw Mismatch("Poisson on D_S: " + pr.lhs.str() + " != " + pr.rhs.str());
  if (Cyclotomic(Rational(D.group().size())) * pr.lhs != Cyclotomic(Rational(-4) * res_geo))
    throw Mismatch("|D_S| F(0) = " + (Cyclotomic(Rational(D.group().size())) * pr.lhs).str() + " != -4 * residual geometric");

  auto corr = correction_term(f, cfg.constants);
  os << "correction term (t, one-dim, residual, total):\n";
  for (const auto& row : corr.rows)
    os << "  " << R(row.t) << ' ' << R(row.one_dim) << ' ' << R(row.residual) << ' ' << R(row.total) << '\n';
  os << "correction total: " << R(corr.total) << '\n';
}

void cmd_cartan(const Options& o, std::ostream& os, const Render& R) {
  auto cfg = config_of(o);
  auto rep = cartan_discrepancy(cfg.function);
  os << "term place coset coefficient group_volume torus_points ratio\n";
  for (const auto& row : rep.rows)
    os << row.term << ' ' << row.place << " (" << row.coset.a << ',' << row.coset.b << ") " << R(row.coefficient) << ' '
       << row.group_volume.get_str() << ' ' << row.torus_points << ' ' << R(row.ratio) << '\n';
  os << "term place group_integral torus_form\n";
  for (const auto& t : rep.totals)
    os << t.term << ' ' << t.place << ' ' << R(t.group_integral) << ' ' << R(t.torus_form) << '\n';
}

void cmd_intertwine(const Options& o, std::ostream& os, const Render& R) {
  auto grid = real_list("--s", o.s.empty() ? "1e-2,1e-3,1e-4" : o.s);
  os << "constant: " << R(intertwining_constant()) << '\n';
  os << "s,completed_ratio,distance,uncompleted_ratio\n";
  std::vector<IntertwiningCheck> checks;
  for (double s : grid) {
    try {
      checks.push_back(numeric_verify(s));
    } catch (const std::invalid_argument& e) {
      throw UsageError("--s", e.what());
    }
    const auto& c = checks.back();
    os << R(c.s) << ',' << R(c.completed_ratio) << ',' << R(c.distance) << ',' << R(c.uncompleted_ratio) << '\n';
  }
  os << "uncompleted ratio at s = 1: " << R(uncompleted_ratio_at_one()) << '\n';
  for (std::size_t i = 1; i < checks.size(); ++i)
    if (checks[i].s < checks[i - 1].s && !(checks[i].distance < checks[i - 1].distance))
      throw Mismatch("distance does not shrink from s = " + R(checks[i - 1].s) + " to s = " + R(checks[i].s));
}

void cmd_tau(const Options& o, std::ostream& os, const Render&) {
  int X = single_int("--N", o.N, 10000);
  EigenTable t;
  try {
    t = delta_qexpansion(X);
  } catch (const std::exception& e) {
    throw UsageError("--N", e.what());
  }
  if (t.at(2) != -24) throw Mismatch("tau(2) = " + t.at(2).get_str());
  write_eigentable(os, t);
}

void cmd_estimate_mr(const Options& o, std::ostream& os, const Render& R) {
  auto r = rep_of(o);
  if (o.method != "log" && o.method != "residue") throw UsageError("--method", "expected log or residue");
  EigenTable t;
  if (!o.in.empty()) {
    if (o.in.size() != 1) throw UsageError("--in", "expected one eigenvalue table");
    try {
      t = load_eigentable(o.in.front());
    } catch (const std::invalid_argument& e) {
      throw UsageError("--in", e.what());
    }
  }
  if (o.method == "residue") {
    auto grid = real_list("--s", o.s.empty() ? "2,1.5,1.25,1.1" : o.s);
    if (o.in.empty()) t = delta_qexpansion(single_int("--N", o.N, 10000));
    std::vector<ResiduePoint> pts;
    try {
      pts = residue_estimator(r, t, grid);
    } catch (const std::invalid_argument& e) {
      throw UsageError("--s", e.what());
    }
    os << "s,X,estimate,stable\n";
    for (const auto& p : pts) os << R(p.s) << ',' << p.X << ',' << R(p.value) << ',' << (p.stable ? 1 : 0) << '\n';
    return;
  }
  Normalization norm;
  if (o.norm == "chebyshev") norm = Normalization::Chebyshev;
  else if (o.norm == "prime-count") norm = Normalization::PrimeCount;
  else throw UsageError("--norm", "expected chebyshev or prime-count");
  std::vector<int> Ns = int_list("--N", o.N.empty() ? "100,1000,10000" : o.N);
  int top = 0;
  for (int N : Ns) {
    if (N < 3) throw UsageError("--N", "needs N >= 3");
    top = std::max(top, N);
  }
  if (o.in.empty()) t = delta_qexpansion(top);
  os << "N,estimate\n";
  for (int N : Ns) {
    EstimatorValue e;
    try {
      e = mr_estimator(r, t, N);
    } catch (const std::invalid_argument& ex) {
      throw UsageError("--N", ex.what());
    }
    os << N << ',' << R(e.value(norm)) << '\n';
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hecke algebra, orbital integral and trace formula checks for GL(2)"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("-o,--out", o.out_path, "write the report here instead of stdout");
  app.add_option("--float", o.float_digits, "decimal output with this many digits")->check(CLI::Range(0, 60));
  app.add_option("--jobs", o.jobs, "worker threads for parallel sums")->check(CLI::Range(1, 256));

  using Handler = void (*)(const Options&, std::ostream&, const Render&);
  std::vector<std::pair<CLI::App*, Handler>> subs;
  auto sub = [&](const char* name, const char* help, Handler h) {
    auto* s = app.add_subcommand(name, help);
    subs.emplace_back(s, h);
    return s;
  };
  auto q = [&](CLI::App* s) { s->add_option("--q", o.q, "residue field size (a prime)"); };
  auto in = [&](CLI::App* s) { s->add_option("--in", o.in, "hecke file, or unit / T / a,b"); };

  auto* sat = sub("satake", "Satake transform of a Hecke element", cmd_satake);
  q(sat);
  in(sat);
  auto* conv = sub("convolve", "convolution of two Hecke elements", cmd_convolve);
  q(conv);
  in(conv);
  auto* bf = sub("basic-fn", "homogeneous pieces of the basic function", cmd_basic_fn);
  q(bf);
  bf->add_option("--r", o.r, "representation: std, symK, symK*det^m, proxy, ...");
  bf->add_option("--N", o.N, "highest degree");
  auto* lf = sub("l-factor", "local L-factor against traces of the basic function", cmd_l_factor);
  q(lf);
  lf->add_option("--r", o.r);
  lf->add_option("--N", o.N, "truncation order");
  lf->add_option("--alpha", o.alpha, "Satake parameter alpha: re or re,im");
  lf->add_option("--beta", o.beta, "Satake parameter beta: re or re,im");
  auto* orb = sub("orbital", "split orbital integral with the tree oracle", cmd_orbital);
  q(orb);
  in(orb);
  orb->add_option("--gamma", o.gamma, "e1,e2[,d]");
  orb->add_option("--depth", o.depth, "oracle depth (default: d - min b)");
  auto* oz = sub("orbital-zeta", "orbital zeta series and its rational form", cmd_orbital_zeta);
  q(oz);
  oz->add_option("--gamma", o.gamma, "e1,e2[,d]");
  oz->add_option("--r", o.r);
  oz->add_option("--N", o.N, "series order");
  oz->add_option("--fit", o.fit, "numerator,denominator degree");
  auto* pc = sub("phi-check", "Phi transform against H^(1/2) times the orbital integral", cmd_phi_check);
  q(pc);
  in(pc);
  pc->add_option("--gamma", o.gamma, "e1,e2[,d]");
  auto* po = sub("poisson", "finite Poisson summation", cmd_poisson);
  po->add_option("--group", o.group, "cyclic orders n1,n2,...");
  po->add_option("--f", o.f, "function file");
  auto* cg = sub("class-group", "square-class group D_S and its characters", cmd_class_group);
  cg->add_option("-S,--places", o.places, "places, e.g. inf,2,3");
  auto* as = sub("assemble", "one-dimensional and residual terms of a global test function", cmd_assemble);
  as->add_option("--config", o.config, "key = value file");
  auto* cr = sub("cartan-report", "group versus torus volumes per coset", cmd_cartan);
  cr->add_option("--config", o.config, "key = value file");
  auto* it = sub("intertwine", "intertwining constant near the residual point", cmd_intertwine);
  it->add_option("--s", o.s, "comma-separated s values");
  auto* tau = sub("tau", "eigenvalue table of Delta from its q-expansion", cmd_tau);
  tau->add_option("--N", o.N, "largest prime bound");
  auto* mr = sub("estimate-mr", "m_r estimators on an eigenvalue table", cmd_estimate_mr);
  mr->add_option("--in", o.in, "eigenvalue CSV (default: Delta)");
  mr->add_option("--r", o.r);
  mr->add_option("--N", o.N, "comma-separated N values (or the table bound for residue)");
  mr->add_option("--norm", o.norm, "chebyshev or prime-count");
  mr->add_option("--method", o.method, "log or residue");
  mr->add_option("--s", o.s, "residue grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what();
    // name the unrecognized subcommand, if that is what went wrong
    if (argc > 1 && argv[1][0] != '-' && !app.got_subcommand(argv[1])) err << " (unknown subcommand '" << argv[1] << "')";
    err << '\n';
    return kUsageError;
  }

  Handler handler = nullptr;
  for (const auto& [s, h] : subs)
    if (s->parsed()) handler = h;
  Render R{o.float_digits};

  std::ostringstream report;
  int code = kOk;
  try {
    handler(o, report, R);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Mismatch& e) {
    report << "VERIFICATION FAILED: " << e.what() << '\n';
    err << "verification failed: " << e.what() << '\n';
    code = kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (o.out_path.empty()) {
    out << report.str();
  } else {
    std::ofstream file(o.out_path);
    if (!file) {
      err << "usage error: --out: cannot write '" << o.out_path << "'\n";
      return kUsageError;
    }
    file << report.str();
  }
  return code;
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace gl2::cli
