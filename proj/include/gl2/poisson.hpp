#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gl2/cyclotomic.hpp"
#include "gl2/rational.hpp"

namespace gl2 {

using Element = std::vector<int>;

/// Z/n_1 x ... x Z/n_k. Elements are exponent tuples; index() is mixed radix
/// with the first coordinate most significant.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<int> orders, std::vector<std::string> labels = {});

  const std::vector<int>& orders() const { return orders_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  std::int64_t size() const { return size_; }
  /// lcm of the cyclic orders.
  int exponent() const { return exponent_; }

  Element identity() const { return Element(orders_.size(), 0); }
  Element add(const Element& x, const Element& y) const;
  Element negate(const Element& x) const;
  Element normalize(Element x) const;
  std::int64_t index(const Element& x) const;
  Element element(std::int64_t index) const;
  std::string format(const Element& x) const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) { return a.orders_ == b.orders_; }

 private:
  std::vector<int> orders_;
  std::vector<std::string> labels_;
  std::int64_t size_ = 1;
  int exponent_ = 1;
};

/// psi_k(g) = zeta_N^{sum k_i g_i N / n_i}, N the group exponent.
struct GroupCharacter {
  Element k;
  std::string label;

  /// Exponent e with psi(g) = zeta_N^e.
  long exponent_at(const FiniteAbelianGroup& G, const Element& g) const;
  Cyclotomic operator()(const FiniteAbelianGroup& G, const Element& g) const;
  bool is_trivial() const;
};

/// All |G| characters, ordered by the index of k.
std::vector<GroupCharacter> characters(const FiniteAbelianGroup& G);

/// Total function G -> Q(zeta), stored densely by element index.
struct GroupFunction {
  FiniteAbelianGroup group;
  std::vector<Cyclotomic> values;

  explicit GroupFunction(FiniteAbelianGroup G) : group(std::move(G)), values(static_cast<std::size_t>(group.size())) {}
  const Cyclotomic& operator()(const Element& g) const { return values[static_cast<std::size_t>(group.index(g))]; }
  Cyclotomic& operator[](const Element& g) { return values[static_cast<std::size_t>(group.index(g))]; }
};

/// sum_g f(g) conj(psi(g)).
Cyclotomic fourier(const GroupFunction& f, const GroupCharacter& psi);
/// Fourier transform as a function on the dual, identified with G through k.
GroupFunction fourier_transform(const GroupFunction& f);

class Subgroup {
 public:
  /// Subgroup generated by the given elements.
  static Subgroup generated(const FiniteAbelianGroup& G, const std::vector<Element>& generators);
  /// Validates that the listed set is a subgroup (nonempty, closed); throws otherwise.
  static Subgroup from_elements(const FiniteAbelianGroup& G, const std::vector<Element>& elements);

  const std::vector<Element>& elements() const { return elements_; }
  const std::vector<Element>& generators() const { return generators_; }
  std::int64_t size() const { return static_cast<std::int64_t>(elements_.size()); }
  bool contains(const FiniteAbelianGroup& G, const Element& x) const;
  /// Characters trivial on the subgroup.
  std::vector<GroupCharacter> annihilator(const FiniteAbelianGroup& G) const;

 private:
  std::vector<Element> elements_;
  std::vector<Element> generators_;
  std::vector<bool> member_;
};

struct PoissonResult {
  Cyclotomic lhs;
  Cyclotomic rhs;
  bool equal = false;
};

/// lhs = sum_{h in H} f(h), rhs = |H|/|G| sum_{psi in H^perp} fourier(f, psi).
PoissonResult poisson_check(const FiniteAbelianGroup& G, const Subgroup& H, const GroupFunction& f);

/// Text format:
///   group 2 2 2
///   f 1 0 1 <value>        (value `a` or `a,b` for a + b i; unlisted elements are 0)
///   h 1 0 0                (optional subgroup generators)
struct GroupInput {
  FiniteAbelianGroup group;
  GroupFunction function{FiniteAbelianGroup()};
  std::vector<Element> subgroup_generators;
};
GroupInput read_group_input(std::istream& is);
void write_group_function(std::ostream& os, const GroupFunction& f);

// --- the square-class model over Q --------------------------------------

/// A place of Q: 0 stands for the archimedean place.
using Place = std::int64_t;
inline constexpr Place kInfinity = 0;

/// Parses `inf,2,3`.
std::vector<Place> parse_places(const std::string& text);
std::string format_places(const std::vector<Place>& S);

/// Hilbert symbol (a, b)_v for nonzero rationals; v = kInfinity or a prime.
int hilbert_symbol(const Rational& a, const Rational& b, Place v);

/// Kronecker symbol (d / n) for integers, n may be negative or even.
int kronecker(const Integer& d, const Integer& n);

/// The finite model D_S = prod_{v in S} Q_v^x / (Q_v^x)^2 modulo the image of
/// the S-units {+-1} x <p : p in S>.
class ClassGroup {
 public:
  explicit ClassGroup(std::vector<Place> S);

  const std::vector<Place>& places() const { return places_; }
  const FiniteAbelianGroup& group() const { return group_; }
  /// Dimension over F_2 of prod_{v in S} Q_v^x / (Q_v^x)^2.
  int ambient_dimension() const { return static_cast<int>(columns_.size()); }
  const std::vector<std::string>& ambient_labels() const { return column_labels_; }

  /// Square-class coordinates of x in Q_v^x, over the ambient columns of place v.
  std::vector<int> local_coordinates(const Rational& x, Place v) const;
  /// Ambient coordinates of the idele (x_v)_{v in S}.
  std::vector<int> ambient(const std::vector<Rational>& idele) const;
  /// Ambient coordinates of the diagonal image of an S-unit.
  std::vector<int> diagonal(const Rational& t) const;
  /// Class in D_S of an ambient vector.
  Element reduce(const std::vector<int>& ambient_vector) const;
  /// Local representatives (x_v)_{v in S} of a class.
  std::vector<Rational> representative(const Element& x) const;
  /// Local representatives of an ambient vector.
  std::vector<Rational> ambient_representative(const std::vector<int>& ambient_vector) const;

  /// psi_d(x) = prod_{v in S} (d, x_v)_v on ambient vectors.
  int ambient_character(const Integer& d, const std::vector<int>& ambient_vector) const;
  /// Fundamental discriminants unramified outside S (1 first), one per character.
  std::vector<Integer> discriminants() const;
  /// psi_d as a group character; throws if d is not among discriminants().
  GroupCharacter character(const Integer& d) const;

  bool is_s_unit(const Rational& t) const;

 private:
  struct Column {
    Place place;
    int kind;  // 0 sign, 1 unit class at odd p, 2 unit (-1) bit at 2, 3 unit (5) bit at 2, 4 valuation
  };
  std::vector<Place> places_;
  std::vector<Column> columns_;
  std::vector<std::string> column_labels_;
  std::vector<std::vector<int>> basis_;  // RREF rows spanning the S-unit image
  std::vector<int> pivots_;
  std::vector<int> free_columns_;
  FiniteAbelianGroup group_;
};

/// Class of the idele with sign(t) at infinity and p^{v_p(t)} at p in S.
/// Throws std::invalid_argument if t is not an S-unit.
Element project_to_D(const Rational& t, const ClassGroup& D);

/// Kronecker character (d / t) extended multiplicatively to rationals; 0 when
/// t shares a prime with d.
int quad_char_eval(const Integer& d, const Rational& t);

}  // namespace gl2
