#include "gl2/polynomial.hpp"

#include <map>

namespace gl2 {

Polynomial<LaurentQ> parse_polynomial(const std::string& terms, std::int64_t q) {
  std::istringstream is(terms);
  std::map<int, LaurentQ> by_exponent;
  std::string tok;
  while (is >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected exponent:coefficient, got '" + tok + "'");
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(tok.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent in '" + tok + "'");
    }
    if (e < 0) throw std::invalid_argument("negative exponent in '" + tok + "'");
    if (by_exponent.count(e)) throw std::invalid_argument("duplicate exponent in '" + tok + "'");
    by_exponent[e] = LaurentQ::parse(tok.substr(colon + 1), q);
  }
  if (by_exponent.empty()) return {};
  std::vector<LaurentQ> coeffs(static_cast<std::size_t>(by_exponent.rbegin()->first) + 1);
  for (auto& [e, c] : by_exponent) coeffs[static_cast<std::size_t>(e)] = c;
  return Polynomial<LaurentQ>(std::move(coeffs));
}

namespace {

std::map<std::string, std::string> read_keyed_lines(std::istream& is) {
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected 'key: value' line, got '" + line + "'");
    std::string key = line.substr(0, colon);
    if (out.count(key)) throw std::invalid_argument("duplicate key '" + key + "'");
    out[key] = line.substr(colon + 1);
  }
  return out;
}

}  // namespace

RationalFunction<LaurentQ> read_rational_function(std::istream& is, std::int64_t q) {
  auto kv = read_keyed_lines(is);
  if (!kv.count("num") || !kv.count("den")) throw std::invalid_argument("rational function needs num: and den: lines");
  return RationalFunction<LaurentQ>(parse_polynomial(kv["num"], q), parse_polynomial(kv["den"], q));
}

Series<LaurentQ> read_series(std::istream& is, std::int64_t q) {
  auto kv = read_keyed_lines(is);
  if (!kv.count("order") || !kv.count("series")) throw std::invalid_argument("series needs order: and series: lines");
  int order = std::stoi(kv["order"]);
  if (order < 0) throw std::invalid_argument("negative series order");
  auto poly = parse_polynomial(kv["series"], q);
  if (poly.degree() > order) throw std::invalid_argument("series term beyond declared order");
  return Series<LaurentQ>(poly.head(order + 1));
}

}  // namespace gl2
