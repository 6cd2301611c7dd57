#include "gl2/poisson.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gl2 {

// --- groups -------------------------------------------------------------

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> orders, std::vector<std::string> labels)
    : orders_(std::move(orders)), labels_(std::move(labels)) {
  for (int n : orders_) {
    if (n < 1) throw std::invalid_argument("cyclic orders must be >= 1");
    size_ *= n;
    if (size_ > (1 << 24)) throw std::length_error("group too large for dense storage");
    exponent_ = std::lcm(exponent_, n);
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < orders_.size(); ++i) labels_.push_back("g" + std::to_string(i));
  }
  if (labels_.size() != orders_.size()) throw std::invalid_argument("one label per generator required");
}

Element FiniteAbelianGroup::normalize(Element x) const {
  if (x.size() != orders_.size()) throw std::invalid_argument("element has wrong length");
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = ((x[i] % orders_[i]) + orders_[i]) % orders_[i];
  return x;
}

Element FiniteAbelianGroup::add(const Element& x, const Element& y) const {
  Element z(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) z[i] = (x[i] + y[i]) % orders_[i];
  return z;
}

Element FiniteAbelianGroup::negate(const Element& x) const {
  Element z(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) z[i] = (orders_[i] - x[i]) % orders_[i];
  return z;
}

std::int64_t FiniteAbelianGroup::index(const Element& x) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + x[i];
  return idx;
}

Element FiniteAbelianGroup::element(std::int64_t idx) const {
  Element x(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    x[i] = static_cast<int>(idx % orders_[i]);
    idx /= orders_[i];
  }
  return x;
}

std::string FiniteAbelianGroup::format(const Element& x) const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
  os << ")";
  return os.str();
}

long GroupCharacter::exponent_at(const FiniteAbelianGroup& G, const Element& g) const {
  const long N = G.exponent();
  long e = 0;
  for (std::size_t i = 0; i < k.size(); ++i) e += static_cast<long>(k[i]) * g[i] * (N / G.orders()[i]);
  return e % N;
}

Cyclotomic GroupCharacter::operator()(const FiniteAbelianGroup& G, const Element& g) const {
  return Cyclotomic::root_of_unity(G.exponent(), exponent_at(G, g));
}

bool GroupCharacter::is_trivial() const {
  return std::all_of(k.begin(), k.end(), [](int x) { return x == 0; });
}

std::vector<GroupCharacter> characters(const FiniteAbelianGroup& G) {
  std::vector<GroupCharacter> out;
  out.reserve(static_cast<std::size_t>(G.size()));
  for (std::int64_t i = 0; i < G.size(); ++i) out.push_back({G.element(i), ""});
  return out;
}

// --- Fourier analysis ---------------------------------------------------

namespace {

// Common denominator and int64 numerators when every value is a rational
// whose scaled numerator fits; used for an exact integer fast path.
bool scaled_integers(const GroupFunction& f, Integer& denom, std::vector<std::int64_t>& nums) {
  denom = 1;
  std::vector<Rational> vals;
  vals.reserve(f.values.size());
  for (const auto& v : f.values) {
    if (v.order() != 1) return false;
    vals.push_back(v.coefficients()[0]);
    Integer g;
    mpz_lcm(g.get_mpz_t(), denom.get_mpz_t(), vals.back().get_den_mpz_t());
    denom = g;
    if (mpz_sizeinbase(denom.get_mpz_t(), 2) > 40) return false;
  }
  nums.resize(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    Integer n = vals[i].get_num() * (denom / vals[i].get_den());
    if (!n.fits_slong_p()) return false;
    nums[i] = n.get_si();
    if (nums[i] > (std::int64_t{1} << 52) || nums[i] < -(std::int64_t{1} << 52)) return false;
  }
  return true;
}

}  // namespace

namespace {

// psi's exponent at every element, in index order.
std::vector<long> character_exponents(const FiniteAbelianGroup& G, const GroupCharacter& psi) {
  const long N = G.exponent();
  std::vector<long> exps{0};
  for (int i = 0; i < G.rank(); ++i) {
    const int n = G.orders()[static_cast<std::size_t>(i)];
    const long step = static_cast<long>(psi.k[static_cast<std::size_t>(i)]) * (N / n) % N;
    std::vector<long> next(exps.size() * static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < exps.size(); ++j)
      for (int g = 0; g < n; ++g) next[j * static_cast<std::size_t>(n) + static_cast<std::size_t>(g)] = (exps[j] + g * step) % N;
    exps = std::move(next);
  }
  return exps;
}

struct ScaledFunction {
  bool ok = false;
  Integer denom;
  std::vector<std::int64_t> nums;
};

ScaledFunction scale(const GroupFunction& f) {
  ScaledFunction s;
  s.ok = scaled_integers(f, s.denom, s.nums);
  return s;
}

Cyclotomic fourier_impl(const GroupFunction& f, const ScaledFunction& scaled, const GroupCharacter& psi) {
  const auto& G = f.group;
  const int N = G.exponent();
  const auto exps = character_exponents(G, psi);
  if (scaled.ok) {
    std::vector<__int128> bucket(static_cast<std::size_t>(N), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (scaled.nums[i] == 0) continue;
      bucket[static_cast<std::size_t>((N - exps[i]) % N)] += scaled.nums[i];
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(N));
    for (int e = 0; e < N; ++e) {
      __int128 b = bucket[static_cast<std::size_t>(e)];
      if (b == 0) continue;
      // |b| <= 2^24 * 2^52 fits in a signed 64-bit long
      Rational r(Integer(static_cast<long>(b)), scaled.denom);
      r.canonicalize();
      coeffs[static_cast<std::size_t>(e)] = r;
    }
    return Cyclotomic::from_coefficients(std::move(coeffs));
  }
  Cyclotomic acc = Cyclotomic::root_of_unity(N, 0, 0);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    const auto& v = f.values[i];
    if (v.is_zero()) continue;
    acc += v.times_root(N, -exps[i]);
  }
  return acc;
}

}  // namespace

Cyclotomic fourier(const GroupFunction& f, const GroupCharacter& psi) { return fourier_impl(f, scale(f), psi); }

GroupFunction fourier_transform(const GroupFunction& f) {
  GroupFunction out(f.group);
  auto scaled = scale(f);
  for (const auto& psi : characters(f.group)) out[psi.k] = fourier_impl(f, scaled, psi);
  return out;
}

// --- subgroups and Poisson ---------------------------------------------

Subgroup Subgroup::generated(const FiniteAbelianGroup& G, const std::vector<Element>& generators) {
  Subgroup H;
  H.member_.assign(static_cast<std::size_t>(G.size()), false);
  for (const auto& g : generators) H.generators_.push_back(G.normalize(g));
  std::vector<Element> frontier{G.identity()};
  H.member_[static_cast<std::size_t>(G.index(G.identity()))] = true;
  H.elements_.push_back(G.identity());
  while (!frontier.empty()) {
    Element x = frontier.back();
    frontier.pop_back();
    for (const auto& g : H.generators_) {
      Element y = G.add(x, g);
      auto idx = static_cast<std::size_t>(G.index(y));
      if (H.member_[idx]) continue;
      H.member_[idx] = true;
      H.elements_.push_back(y);
      frontier.push_back(y);
    }
  }
  std::sort(H.elements_.begin(), H.elements_.end(),
            [&](const Element& a, const Element& b) { return G.index(a) < G.index(b); });
  return H;
}

Subgroup Subgroup::from_elements(const FiniteAbelianGroup& G, const std::vector<Element>& elements) {
  Subgroup H;
  H.member_.assign(static_cast<std::size_t>(G.size()), false);
  for (const auto& e : elements) {
    Element x = G.normalize(e);
    auto idx = static_cast<std::size_t>(G.index(x));
    if (H.member_[idx]) continue;
    H.member_[idx] = true;
    H.elements_.push_back(x);
  }
  if (!H.member_[static_cast<std::size_t>(G.index(G.identity()))]) throw std::invalid_argument("subgroup must contain the identity");
  for (const auto& x : H.elements_)
    for (const auto& y : H.elements_)
      if (!H.member_[static_cast<std::size_t>(G.index(G.add(x, y)))]) {
        throw std::invalid_argument("not a subgroup: " + G.format(x) + " + " + G.format(y) + " is missing");
      }
  std::sort(H.elements_.begin(), H.elements_.end(),
            [&](const Element& a, const Element& b) { return G.index(a) < G.index(b); });
  H.generators_ = H.elements_;
  return H;
}

bool Subgroup::contains(const FiniteAbelianGroup& G, const Element& x) const {
  return member_.at(static_cast<std::size_t>(G.index(G.normalize(x))));
}

std::vector<GroupCharacter> Subgroup::annihilator(const FiniteAbelianGroup& G) const {
  std::vector<GroupCharacter> out;
  for (auto& psi : characters(G)) {
    bool trivial = std::all_of(generators_.begin(), generators_.end(),
                               [&](const Element& g) { return psi.exponent_at(G, g) == 0; });
    if (trivial) out.push_back(std::move(psi));
  }
  return out;
}

PoissonResult poisson_check(const FiniteAbelianGroup& G, const Subgroup& H, const GroupFunction& f) {
  if (!(f.group == G)) throw std::invalid_argument("function lives on a different group");
  PoissonResult r;
  r.lhs = Cyclotomic(0);
  for (const auto& h : H.elements()) r.lhs += f(h);
  Cyclotomic sum(0);
  auto scaled = scale(f);
  for (const auto& psi : H.annihilator(G)) sum += fourier_impl(f, scaled, psi);
  r.rhs = Cyclotomic(Rational(H.size(), 1) / Rational(G.size(), 1)) * sum;
  r.equal = r.lhs == r.rhs;
  return r;
}

// --- text format --------------------------------------------------------

GroupInput read_group_input(std::istream& is) {
  GroupInput in;
  bool have_group = false;
  std::set<std::int64_t> seen;
  std::string line;
  int lineno = 0;
  auto read_tuple = [&](std::istringstream& ls) {
    Element x(static_cast<std::size_t>(in.group.rank()));
    for (auto& c : x) {
      if (!(ls >> c)) throw std::invalid_argument("line " + std::to_string(lineno) + ": element tuple too short");
    }
    return in.group.normalize(x);
  };
  while (std::getline(is, line)) {
    ++lineno;
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "group") {
      if (have_group) throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate group line");
      std::vector<int> orders;
      int n;
      while (ls >> n) orders.push_back(n);
      if (orders.empty()) throw std::invalid_argument("line " + std::to_string(lineno) + ": group needs cyclic orders");
      in.group = FiniteAbelianGroup(orders);
      in.function = GroupFunction(in.group);
      have_group = true;
    } else if (key == "f" || key == "h") {
      if (!have_group) throw std::invalid_argument("line " + std::to_string(lineno) + ": group line must come first");
      Element x = read_tuple(ls);
      if (key == "h") {
        in.subgroup_generators.push_back(x);
        continue;
      }
      std::string value;
      if (!(ls >> value)) throw std::invalid_argument("line " + std::to_string(lineno) + ": missing value");
      if (!seen.insert(in.group.index(x)).second) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate element " + in.group.format(x));
      }
      in.function[x] = Cyclotomic::parse(value);
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!have_group) throw std::invalid_argument("missing group line");
  return in;
}

void write_group_function(std::ostream& os, const GroupFunction& f) {
  os << "group";
  for (int n : f.group.orders()) os << ' ' << n;
  os << '\n';
  for (std::int64_t i = 0; i < f.group.size(); ++i) {
    const auto& v = f.values[static_cast<std::size_t>(i)];
    if (v.is_zero()) continue;
    if (!v.is_rational()) throw std::invalid_argument("only rational values can be written");
    os << 'f';
    for (int c : f.group.element(i)) os << ' ' << c;
    os << ' ' << to_string(v.to_rational()) << '\n';
  }
}

// --- arithmetic of Q ----------------------------------------------------

std::vector<Place> parse_places(const std::string& text) {
  std::vector<Place> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "inf" || tok == "oo" || tok == "infinity") {
      out.push_back(kInfinity);
      continue;
    }
    std::size_t used = 0;
    long long p = 0;
    try {
      p = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || !is_prime(p)) throw std::invalid_argument("bad place '" + tok + "'");
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw std::invalid_argument("repeated place");
  if (out.empty() || out.front() != kInfinity) throw std::invalid_argument("place set must contain inf");
  return out;
}

std::string format_places(const std::vector<Place>& S) {
  std::string s;
  for (auto v : S) {
    if (!s.empty()) s += ",";
    s += v == kInfinity ? "inf" : std::to_string(v);
  }
  return s;
}

namespace {

int legendre(const Integer& a, std::int64_t p) {
  Integer pz(static_cast<long>(p));
  return mpz_legendre(a.get_mpz_t(), pz.get_mpz_t());
}

// x = p^e * u with u a p-adic unit given as an exact rational.
std::pair<int, Rational> split_valuation(const Rational& x, std::int64_t p) {
  int e = valuation(x, p);
  return {e, x / int_power(p, e)};
}

// Residue of a p-adic unit rational mod m (m a power of p).
Integer unit_mod(const Rational& u, std::int64_t m) {
  Integer mz(static_cast<long>(m)), inv, r;
  if (!mpz_invert(inv.get_mpz_t(), u.get_den_mpz_t(), mz.get_mpz_t())) throw std::domain_error("not a unit");
  r = u.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mz.get_mpz_t());
  return r;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, Place v) {
  if (a == 0 || b == 0) throw std::domain_error("Hilbert symbol of zero");
  if (v == kInfinity) return (a < 0 && b < 0) ? -1 : 1;
  auto [alpha, u] = split_valuation(a, v);
  auto [beta, w] = split_valuation(b, v);
  if (v == 2) {
    Integer u8 = unit_mod(u, 8), w8 = unit_mod(w, 8);
    auto eps = [](const Integer& x) { return static_cast<int>(((x.get_si() - 1) / 2) & 1); };
    auto omega = [](const Integer& x) { return static_cast<int>(((x.get_si() * x.get_si() - 1) / 8) & 1); };
    int e = eps(u8) * eps(w8) + (alpha & 1) * omega(w8) + (beta & 1) * omega(u8);
    return (e & 1) ? -1 : 1;
  }
  Integer up = unit_mod(u, v), wp = unit_mod(w, v);
  int sign = ((alpha & 1) && (beta & 1) && ((v - 1) / 2) % 2 == 1) ? -1 : 1;
  if (beta & 1) sign *= legendre(up, v);
  if (alpha & 1) sign *= legendre(wp, v);
  return sign;
}

int kronecker(const Integer& d, const Integer& n) { return mpz_kronecker(d.get_mpz_t(), n.get_mpz_t()); }

int quad_char_eval(const Integer& d, const Rational& t) {
  if (t == 0) return 0;
  return kronecker(d, t.get_num()) * kronecker(d, t.get_den());
}

// --- D_S ----------------------------------------------------------------

ClassGroup::ClassGroup(std::vector<Place> S) : places_(std::move(S)) {
  std::sort(places_.begin(), places_.end());
  if (places_.empty() || places_.front() != kInfinity) throw std::invalid_argument("place set must contain inf");
  for (auto v : places_)
    if (v != kInfinity && !is_prime(v)) throw std::invalid_argument("places must be primes");
  // unit columns, then the sign, then valuation columns: pivots of the
  // S-unit image then fall on unit columns where possible
  for (auto v : places_) {
    if (v == 2) {
      columns_.push_back({2, 2});
      column_labels_.push_back("2:unit(-1)");
      columns_.push_back({2, 3});
      column_labels_.push_back("2:unit(5)");
    } else if (v != kInfinity) {
      columns_.push_back({v, 1});
      column_labels_.push_back(std::to_string(v) + ":nonresidue");
    }
  }
  columns_.push_back({kInfinity, 0});
  column_labels_.push_back("inf:sign");
  for (auto v : places_) {
    if (v == kInfinity) continue;
    columns_.push_back({v, 4});
    column_labels_.push_back(std::to_string(v) + ":uniformizer");
  }

  // image of -1 and of each finite p in S, then row reduction over F_2
  std::vector<std::vector<int>> rows{diagonal(Rational(-1))};
  for (auto v : places_)
    if (v != kInfinity) rows.push_back(diagonal(Rational(static_cast<long>(v))));
  const int n = ambient_dimension();
  int r = 0;
  for (int c = 0; c < n && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(piv)]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || !rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) continue;
      for (int k = 0; k < n; ++k) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] ^= rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
    }
    pivots_.push_back(c);
    ++r;
  }
  rows.resize(static_cast<std::size_t>(r));
  basis_ = std::move(rows);
  std::vector<std::string> labels;
  for (int c = 0; c < n; ++c) {
    if (std::find(pivots_.begin(), pivots_.end(), c) != pivots_.end()) continue;
    free_columns_.push_back(c);
    labels.push_back(column_labels_[static_cast<std::size_t>(c)]);
  }
  group_ = FiniteAbelianGroup(std::vector<int>(free_columns_.size(), 2), labels);
}

std::vector<int> ClassGroup::local_coordinates(const Rational& x, Place v) const {
  if (x == 0) throw std::domain_error("square class of zero");
  if (v == kInfinity) return {x < 0 ? 1 : 0};
  auto [e, u] = split_valuation(x, v);
  if (v == 2) {
    long r = unit_mod(u, 8).get_si();
    int a = (r == 3 || r == 7) ? 1 : 0;
    int b = (r == 3 || r == 5) ? 1 : 0;
    return {a, b, e & 1};
  }
  return {legendre(unit_mod(u, v), v) == -1 ? 1 : 0, e & 1};
}

std::vector<int> ClassGroup::ambient(const std::vector<Rational>& idele) const {
  if (idele.size() != places_.size()) throw std::invalid_argument("idele needs one component per place");
  std::vector<int> out(columns_.size(), 0);
  for (std::size_t i = 0; i < places_.size(); ++i) {
    const Place v = places_[i];
    auto loc = local_coordinates(idele[i], v);
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      if (columns_[c].place != v) continue;
      switch (columns_[c].kind) {
        case 0: out[c] = loc[0]; break;
        case 1: out[c] = loc[0]; break;
        case 2: out[c] = loc[0]; break;
        case 3: out[c] = loc[1]; break;
        case 4: out[c] = loc.back(); break;
      }
    }
  }
  return out;
}

std::vector<int> ClassGroup::diagonal(const Rational& t) const {
  return ambient(std::vector<Rational>(places_.size(), t));
}

Element ClassGroup::reduce(const std::vector<int>& ambient_vector) const {
  std::vector<int> x = ambient_vector;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    if (!x[static_cast<std::size_t>(pivots_[r])]) continue;
    for (std::size_t k = 0; k < x.size(); ++k) x[k] ^= basis_[r][k];
  }
  Element out;
  for (int c : free_columns_) out.push_back(x[static_cast<std::size_t>(c)]);
  return out;
}

std::vector<Rational> ClassGroup::ambient_representative(const std::vector<int>& amb) const {
  std::vector<Rational> out;
  for (auto v : places_) {
    Rational val(1);
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      if (columns_[c].place != v || !amb[c]) continue;
      switch (columns_[c].kind) {
        case 0: val *= -1; break;
        case 1: {
          long n = 2;
          while (legendre(Integer(n), v) != -1) ++n;
          val *= n;
          break;
        }
        case 2: val *= -1; break;
        case 3: val *= 5; break;
        case 4: val *= v; break;
      }
    }
    out.push_back(val);
  }
  return out;
}

std::vector<Rational> ClassGroup::representative(const Element& x) const {
  std::vector<int> amb(columns_.size(), 0);
  for (std::size_t i = 0; i < free_columns_.size(); ++i) amb[static_cast<std::size_t>(free_columns_[i])] = x.at(i) & 1;
  return ambient_representative(amb);
}

int ClassGroup::ambient_character(const Integer& d, const std::vector<int>& ambient_vector) const {
  auto rep = ambient_representative(ambient_vector);
  int sign = 1;
  for (std::size_t i = 0; i < places_.size(); ++i) sign *= hilbert_symbol(Rational(d), rep[i], places_[i]);
  return sign;
}

std::vector<Integer> ClassGroup::discriminants() const {
  std::vector<Integer> ds{Integer(1)};
  for (auto v : places_) {
    if (v == kInfinity) continue;
    std::vector<Integer> next;
    std::vector<long> factors = v == 2 ? std::vector<long>{1, -4, 8, -8}
                                       : std::vector<long>{1, (v % 4 == 1) ? static_cast<long>(v) : -static_cast<long>(v)};
    for (const auto& d : ds)
      for (long f : factors) next.push_back(d * f);
    ds = std::move(next);
  }
  std::sort(ds.begin(), ds.end(), [](const Integer& a, const Integer& b) {
    Integer aa = abs(a), bb = abs(b);
    if (aa != bb) return aa < bb;
    return a > b;
  });
  return ds;
}

GroupCharacter ClassGroup::character(const Integer& d) const {
  auto ds = discriminants();
  if (std::find(ds.begin(), ds.end(), d) == ds.end()) {
    throw std::invalid_argument("d = " + d.get_str() + " is not a fundamental discriminant unramified outside S");
  }
  GroupCharacter psi;
  psi.label = "d=" + d.get_str();
  for (int c : free_columns_) {
    std::vector<int> e(columns_.size(), 0);
    e[static_cast<std::size_t>(c)] = 1;
    psi.k.push_back(ambient_character(d, e) == -1 ? 1 : 0);
  }
  return psi;
}

bool ClassGroup::is_s_unit(const Rational& t) const {
  if (t == 0) return false;
  Integer n = abs(t.get_num()), m = t.get_den();
  for (auto v : places_) {
    if (v == kInfinity) continue;
    Integer p(static_cast<long>(v));
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) m /= p;
  }
  return n == 1 && m == 1;
}

Element project_to_D(const Rational& t, const ClassGroup& D) {
  if (!D.is_s_unit(t)) throw std::invalid_argument(to_string(t) + " is not an S-unit for S = " + format_places(D.places()));
  std::vector<Rational> idele;
  for (auto v : D.places()) {
    if (v == kInfinity) idele.push_back(t < 0 ? Rational(-1) : Rational(1));
    else idele.push_back(int_power(v, valuation(t, v)));
  }
  return D.reduce(D.ambient(idele));
}

}  // namespace gl2
