#include "sympow/groupring.hpp"

#include <random>
#include <stdexcept>

#include <fmt/format.h>

#include "sympow/mod_matrix.hpp"

namespace sympow::groupring {

RingShape RingShape::surface(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  return RingShape{Family::surface, genus};
}

RingShape RingShape::wedge(int arity) {
  if (arity < 1) throw std::invalid_argument("arity must be >= 1");
  return RingShape{Family::wedge, arity};
}

std::string RingShape::variable_name(int index) const {
  if (index < 0 || index >= variables()) throw std::out_of_range("variable index");
  if (family == Family::wedge) return fmt::format("z{}", index + 1);
  return index < rank ? fmt::format("x{}", index + 1) : fmt::format("y{}", index - rank + 1);
}

GroupRingElement::GroupRingElement(RingShape shape) : shape_(shape) {}

GroupRingElement GroupRingElement::constant(RingShape shape, const mpz_class& c) {
  GroupRingElement out(shape);
  out.add_term(ExponentVector(static_cast<std::size_t>(shape.variables()), 0), c);
  return out;
}

GroupRingElement GroupRingElement::monomial(RingShape shape, ExponentVector exps, const mpz_class& c) {
  GroupRingElement out(shape);
  out.add_term(exps, c);
  return out;
}

GroupRingElement GroupRingElement::generator(RingShape shape, int variable, int power) {
  if (variable < 0 || variable >= shape.variables()) throw std::out_of_range("generator index");
  ExponentVector exps(static_cast<std::size_t>(shape.variables()), 0);
  exps[static_cast<std::size_t>(variable)] = power;
  return monomial(shape, std::move(exps));
}

GroupRingElement GroupRingElement::one_minus(RingShape shape, int variable) {
  return one(shape) - generator(shape, variable);
}

void GroupRingElement::add_term(const ExponentVector& exps, const mpz_class& c) {
  if (exps.size() != static_cast<std::size_t>(shape_.variables())) {
    throw std::invalid_argument("exponent vector length does not match the ring");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GroupRingElement::check_same_shape(const GroupRingElement& other) const {
  if (!(shape_ == other.shape_)) throw std::invalid_argument("group ring elements from different rings");
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  check_same_shape(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  check_same_shape(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  a.check_same_shape(b);
  GroupRingElement out(a.shape_);
  ExponentVector sum(static_cast<std::size_t>(a.shape_.variables()));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
      out.add_term(sum, ca * cb);
    }
  }
  return out;
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exps, c] : terms_) {
    const bool negative = c < 0;
    const mpz_class magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += magnitude.get_str();
    for (std::size_t j = 0; j < exps.size(); ++j) {
      if (exps[j] == 0) continue;
      out += "*" + shape_.variable_name(static_cast<int>(j));
      if (exps[j] != 1) out += fmt::format("^{}", exps[j]);
    }
  }
  return out;
}

GroupRingElement add(const GroupRingElement& a, const GroupRingElement& b) { return a + b; }

GroupRingElement multiply(const GroupRingElement& a, const GroupRingElement& b) { return a * b; }

mpz_class augmentation(const GroupRingElement& a) {
  mpz_class sum = 0;
  for (const auto& [e, c] : a.terms()) sum += c;
  return sum;
}

UnitSpecialization UnitSpecialization::random(const RingShape& shape, std::uint64_t prime,
                                              std::uint64_t seed, std::uint64_t stream) {
  if (prime < 3 || !modp::is_prime(prime)) throw std::invalid_argument("specialization prime must be an odd prime");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32U)};
  std::mt19937_64 gen(seq);
  UnitSpecialization s;
  s.prime = prime;
  s.values.resize(static_cast<std::size_t>(shape.variables()));
  // p == 3 leaves {2} as the only unit different from 1.
  for (auto& v : s.values) v = prime == 3 ? 2 : 2 + gen() % (prime - 2);
  return s;
}

UnitSpecialization UnitSpecialization::constant(const RingShape& shape, std::uint64_t prime,
                                                std::uint64_t value) {
  UnitSpecialization s;
  s.prime = prime;
  s.values.assign(static_cast<std::size_t>(shape.variables()), value % prime);
  s.validate(shape);
  return s;
}

void UnitSpecialization::validate(const RingShape& shape) const {
  if (prime < 3 || !modp::is_prime(prime)) throw std::invalid_argument("specialization prime must be an odd prime");
  if (values.size() != static_cast<std::size_t>(shape.variables())) {
    throw std::invalid_argument("specialization has the wrong number of values");
  }
  for (auto v : values) {
    if (v % prime == 0) throw std::invalid_argument("specialization values must be units mod p");
  }
}

std::uint64_t specialize(const GroupRingElement& a, const UnitSpecialization& s) {
  const auto p = s.prime;
  if (s.values.size() != static_cast<std::size_t>(a.shape().variables())) {
    throw std::invalid_argument("specialization has the wrong number of values");
  }
  std::uint64_t total = 0;
  for (const auto& [exps, c] : a.terms()) {
    mpz_class reduced = c % mpz_class(static_cast<unsigned long>(p));
    if (reduced < 0) reduced += static_cast<unsigned long>(p);
    std::uint64_t term = reduced.get_ui();
    for (std::size_t j = 0; j < exps.size(); ++j) {
      const auto e = exps[j];
      if (e == 0) continue;
      const std::uint64_t base = e > 0 ? s.values[j] % p : modp::inverse(s.values[j], p);
      term = modp::mul(term, modp::pow(base, static_cast<std::uint64_t>(e > 0 ? e : -static_cast<std::int64_t>(e)), p), p);
    }
    total = modp::add(total, term, p);
  }
  return total;
}

std::size_t finite_quotient_order(const RingShape& shape, int modulus) {
  if (modulus < 1) throw std::invalid_argument("finite quotient modulus must be >= 1");
  std::size_t order = 1;
  for (int j = 0; j < shape.variables(); ++j) order *= static_cast<std::size_t>(modulus);
  return order;
}

IntMatrix finite_quotient(const GroupRingElement& a, int modulus) {
  const std::size_t order = finite_quotient_order(a.shape(), modulus);
  const auto vars = static_cast<std::size_t>(a.shape().variables());
  const auto n = static_cast<std::int64_t>(modulus);

  // Reduced exponents of each term, as an index offset per basis digit.
  std::vector<std::pair<std::vector<std::int64_t>, mpz_class>> reduced;
  reduced.reserve(a.size());
  for (const auto& [exps, c] : a.terms()) {
    std::vector<std::int64_t> r(vars);
    for (std::size_t j = 0; j < vars; ++j) r[j] = ((exps[j] % n) + n) % n;
    reduced.emplace_back(std::move(r), c);
  }

  IntMatrix out(order, order);
  std::vector<std::int64_t> digits(vars, 0);
  for (std::size_t col = 0; col < order; ++col) {
    // digits = basis exponent vector of `col`, most significant first.
    std::size_t rest = col;
    for (std::size_t j = vars; j-- > 0;) {
      digits[j] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(modulus));
      rest /= static_cast<std::size_t>(modulus);
    }
    for (const auto& [r, c] : reduced) {
      std::size_t row = 0;
      for (std::size_t j = 0; j < vars; ++j) {
        row = row * static_cast<std::size_t>(modulus) + static_cast<std::size_t>((digits[j] + r[j]) % n);
      }
      out.add(row, col, c);
    }
  }
  return out;
}

}  // namespace sympow::groupring
