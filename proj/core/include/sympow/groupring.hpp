#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sympow/int_matrix.hpp"

namespace sympow::groupring {

enum class Family { surface, wedge };

/// Names the generators of the free abelian deck group.
///
/// A genus-g surface has 2g generators x1..xg, y1..yg (in that order); a
/// wedge of n circles has generators z1..zn.
struct RingShape {
  Family family = Family::surface;
  int rank = 1;

  static RingShape surface(int genus);
  static RingShape wedge(int arity);

  int variables() const { return family == Family::surface ? 2 * rank : rank; }
  std::string variable_name(int index) const;

  friend bool operator==(const RingShape&, const RingShape&) = default;
};

/// Exponents of one group element; entry j is the power of variable j.
using ExponentVector = std::vector<std::int32_t>;

/// Exact element of the Laurent group ring Z[x1^±1, ..., yg^±1].
///
/// Stored as a sparse map from exponent vector to a nonzero coefficient, so
/// structural equality is ring equality.
class GroupRingElement {
 public:
  using Terms = std::map<ExponentVector, mpz_class>;

  explicit GroupRingElement(RingShape shape);

  static GroupRingElement zero(RingShape shape) { return GroupRingElement(shape); }
  static GroupRingElement constant(RingShape shape, const mpz_class& c);
  static GroupRingElement one(RingShape shape) { return constant(shape, 1); }
  static GroupRingElement monomial(RingShape shape, ExponentVector exps,
                                   const mpz_class& c = 1);
  /// The group element `variable`, raised to `power`.
  static GroupRingElement generator(RingShape shape, int variable, int power = 1);
  /// 1 - v for the given variable v; the boundary of the matching 1-cell.
  static GroupRingElement one_minus(RingShape shape, int variable);

  const RingShape& shape() const { return shape_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const ExponentVector& exps, const mpz_class& c);

  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  GroupRingElement& operator*=(const mpz_class& scalar);
  GroupRingElement operator-() const;

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(GroupRingElement a, const mpz_class& s) { return a *= s; }
  friend GroupRingElement operator*(const mpz_class& s, GroupRingElement a) { return a *= s; }
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  /// Canonical form: terms in lexicographic exponent order, e.g. `1 - 1*x1`.
  std::string to_string() const;

 private:
  void check_same_shape(const GroupRingElement& other) const;

  RingShape shape_;
  Terms terms_;
};

GroupRingElement add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement multiply(const GroupRingElement& a, const GroupRingElement& b);

/// Sum of coefficients: the ring map Z[pi] -> Z sending every group element to 1.
mpz_class augmentation(const GroupRingElement& a);

/// Evaluation of the generators at units of Z/p.
struct UnitSpecialization {
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> values;

  /// Draws values in [2, p-1] from a generator seeded by (seed, stream). The
  /// stream index lets independent trials share one user-visible seed.
  static UnitSpecialization random(const RingShape& shape, std::uint64_t prime,
                                   std::uint64_t seed, std::uint64_t stream = 0);
  /// Every generator evaluated at the same residue.
  static UnitSpecialization constant(const RingShape& shape, std::uint64_t prime,
                                     std::uint64_t value);

  void validate(const RingShape& shape) const;
};

std::uint64_t specialize(const GroupRingElement& a, const UnitSpecialization& s);

/// Matrix of multiplication by `a` on Z[(Z/N)^v] where v = shape.variables().
/// Basis: exponent vectors reduced mod N, in lexicographic order.
IntMatrix finite_quotient(const GroupRingElement& a, int modulus);

/// Number of group elements of (Z/N)^v, i.e. the block size of finite_quotient.
std::size_t finite_quotient_order(const RingShape& shape, int modulus);

}  // namespace sympow::groupring
