#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sympow/groupring.hpp"

namespace sympow::dga {

using groupring::Family;
using groupring::GroupRingElement;
using groupring::RingShape;

/// Number of exterior generators: e1..eg, f1..fg for a surface, e1..en for a wedge.
int exterior_generators(const RingShape& shape);
/// Only the surface algebra carries the divided-power factor.
bool has_divided_powers(const RingShape& shape);

/// Basis monomial e_J * gamma^(s) of Z[pi] (x) Lambda[e, f] (x) Gamma[gamma].
///
/// Bit j of `mask` is the j-th exterior generator (e1 < ... < eg < f1 < ... < fg).
/// gamma^(s) is the divided power of the 2-cell; it has internal degree 2s and
/// filtration weight s.
struct Monomial {
  std::uint32_t mask = 0;
  int gamma = 0;

  int exterior_degree() const;
  int degree() const { return exterior_degree() + 2 * gamma; }
  int weight() const { return exterior_degree() + gamma; }

  /// Canonical order: exterior size, then lexicographic on the sorted
  /// generator list, then gamma index.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical string such as `e1*f2*g^(2)`; the empty monomial prints as `1`.
std::string to_string(const Monomial& m, const RingShape& shape);

/// All exterior masks of the given size over `generators` generators, in
/// canonical order.
std::vector<std::uint32_t> exterior_masks(int generators, int size);

/// Sparse Z[pi]-linear combination of monomials.
class Element {
 public:
  using Terms = std::map<Monomial, GroupRingElement>;

  explicit Element(RingShape shape) : shape_(shape) {}

  static Element zero(RingShape shape) { return Element(shape); }
  static Element one(RingShape shape);
  static Element monomial(RingShape shape, Monomial m);
  static Element term(Monomial m, const GroupRingElement& coefficient);

  const RingShape& shape() const { return shape_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GroupRingElement coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const GroupRingElement& coefficient);

  bool is_homogeneous_degree() const;
  bool is_homogeneous_weight() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  /// Left multiplication by a ring scalar.
  friend Element operator*(const GroupRingElement& r, const Element& a);
  friend bool operator==(const Element&, const Element&) = default;

  /// `(coeff) * monomial` terms joined by ` + `, ordered by (weight, degree, monomial).
  std::string to_string() const;

 private:
  void check_monomial(const Monomial& m) const;

  RingShape shape_;
  Terms terms_;
};

/// Deliberately broken variants of the algebra, used to confirm that the
/// verification suites detect a wrong convention.
struct Conventions {
  bool negate_f1_boundary = false;
  bool unit_divided_powers = false;
};

/// The exterior generator with the given 0-based index.
Element exterior_generator(const RingShape& shape, int index);
Element e_generator(const RingShape& shape, int i);  // 1-based, e_i
Element f_generator(int genus, int i);                // 1-based, f_i
Element gamma_power(int genus, int s);

Element multiply(const Element& a, const Element& b, const Conventions& conv = {});
Element boundary(const Element& a, const Conventions& conv = {});

/// lambda = sum_i (1 - y_i) e_i - (1 - x_i) f_i, the boundary of gamma^(1).
Element lambda_element(int genus);
/// sigma_m = sum over i1 < ... < im of e_i1 f_i1 ... e_im f_im, for 1 <= m <= g.
Element sigma_element(int genus, int m);

/// Boundary of the j-th exterior generator, 1 - v_j.
GroupRingElement generator_boundary(const RingShape& shape, int index, const Conventions& conv = {});

}  // namespace sympow::dga
