#include "sympow/dga.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>

namespace sympow::dga {

namespace {

constexpr int kMaxGenerators = 32;

int popcount(std::uint32_t x) { return std::popcount(x); }

// Parity of the permutation sorting the concatenation a.b of two disjoint
// exterior monomials: the number of pairs (i in a, j in b) with i > j.
int koszul_sign(std::uint32_t a, std::uint32_t b) {
  int inversions = 0;
  while (b != 0) {
    const int j = std::countr_zero(b);
    b &= b - 1;
    inversions += popcount(j + 1 >= 32 ? 0U : a >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

mpz_class binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

int exterior_generators(const RingShape& shape) { return shape.variables(); }

bool has_divided_powers(const RingShape& shape) { return shape.family == Family::surface; }

int Monomial::exterior_degree() const { return popcount(mask); }

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.exterior_degree() <=> b.exterior_degree(); c != 0) return c;
  if (a.mask != b.mask) {
    // First generator where the sorted lists differ; the list containing it is smaller.
    const int j = std::countr_zero(a.mask ^ b.mask);
    return ((a.mask >> j) & 1U) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.gamma <=> b.gamma;
}

std::string to_string(const Monomial& m, const RingShape& shape) {
  std::vector<std::string> factors;
  const int gens = exterior_generators(shape);
  for (int j = 0; j < gens; ++j) {
    if (!((m.mask >> j) & 1U)) continue;
    if (shape.family == Family::surface) {
      factors.push_back(j < shape.rank ? fmt::format("e{}", j + 1) : fmt::format("f{}", j - shape.rank + 1));
    } else {
      factors.push_back(fmt::format("e{}", j + 1));
    }
  }
  if (m.gamma > 0) factors.push_back(fmt::format("g^({})", m.gamma));
  if (factors.empty()) return "1";
  return fmt::format("{}", fmt::join(factors, "*"));
}

std::vector<std::uint32_t> exterior_masks(int generators, int size) {
  if (generators < 0 || generators > kMaxGenerators) throw std::invalid_argument("too many exterior generators");
  std::vector<std::uint32_t> out;
  if (size < 0 || size > generators) return out;
  std::vector<int> idx(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (int i : idx) mask |= 1U << i;
    out.push_back(mask);
    int pos = size - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == generators - size + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < size; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

Element Element::one(RingShape shape) { return monomial(shape, Monomial{}); }

Element Element::monomial(RingShape shape, Monomial m) {
  Element out(shape);
  out.add_term(m, GroupRingElement::one(shape));
  return out;
}

Element Element::term(Monomial m, const GroupRingElement& coefficient) {
  Element out(coefficient.shape());
  out.add_term(m, coefficient);
  return out;
}

void Element::check_monomial(const Monomial& m) const {
  const int gens = exterior_generators(shape_);
  if (gens < kMaxGenerators && (m.mask >> gens) != 0) throw std::invalid_argument("monomial uses a missing generator");
  if (m.gamma < 0) throw std::invalid_argument("negative divided-power index");
  if (m.gamma > 0 && !has_divided_powers(shape_)) {
    throw std::invalid_argument("divided powers do not exist in the wedge algebra");
  }
}

GroupRingElement Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GroupRingElement::zero(shape_) : it->second;
}

void Element::add_term(const Monomial& m, const GroupRingElement& coefficient) {
  if (!(coefficient.shape() == shape_)) throw std::invalid_argument("coefficient from a different ring");
  check_monomial(m);
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Element::is_homogeneous_degree() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

bool Element::is_homogeneous_weight() const {
  if (terms_.empty()) return true;
  const int w = terms_.begin()->first.weight();
  return std::all_of(terms_.begin(), terms_.end(), [w](const auto& t) { return t.first.weight() == w; });
}

Element& Element::operator+=(const Element& other) {
  if (!(shape_ == other.shape_)) throw std::invalid_argument("elements of different algebras");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  if (!(shape_ == other.shape_)) throw std::invalid_argument("elements of different algebras");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Element Element::operator-() const {
  Element out(shape_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Element operator*(const GroupRingElement& r, const Element& a) {
  Element out(a.shape_);
  for (const auto& [m, c] : a.terms_) out.add_term(m, r * c);
  return out;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> sorted;
  for (const auto& t : terms_) sorted.push_back(&t);
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
    return std::make_tuple(a->first.weight(), a->first.degree()) <
           std::make_tuple(b->first.weight(), b->first.degree());
  });
  std::vector<std::string> parts;
  for (const auto* t : sorted) {
    parts.push_back(fmt::format("({}) * {}", t->second.to_string(), dga::to_string(t->first, shape_)));
  }
  return fmt::format("{}", fmt::join(parts, " + "));
}

Element exterior_generator(const RingShape& shape, int index) {
  if (index < 0 || index >= exterior_generators(shape)) throw std::out_of_range("exterior generator index");
  return Element::monomial(shape, Monomial{1U << index, 0});
}

Element e_generator(const RingShape& shape, int i) { return exterior_generator(shape, i - 1); }

Element f_generator(int genus, int i) {
  if (i < 1 || i > genus) throw std::out_of_range("f generator index");
  return exterior_generator(RingShape::surface(genus), genus + i - 1);
}

Element gamma_power(int genus, int s) {
  if (s < 0) throw std::invalid_argument("negative divided-power index");
  return Element::monomial(RingShape::surface(genus), Monomial{0, s});
}

GroupRingElement generator_boundary(const RingShape& shape, int index, const Conventions& conv) {
  auto d = GroupRingElement::one_minus(shape, index);
  if (conv.negate_f1_boundary && shape.family == Family::surface && index == shape.rank) d = -d;
  return d;
}

Element multiply(const Element& a, const Element& b, const Conventions& conv) {
  if (!(a.shape() == b.shape())) throw std::invalid_argument("product of elements from different algebras");
  Element out(a.shape());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.mask & mb.mask) continue;
      mpz_class scalar = koszul_sign(ma.mask, mb.mask);
      if (!conv.unit_divided_powers) scalar *= binomial(ma.gamma + mb.gamma, ma.gamma);
      out.add_term(Monomial{ma.mask | mb.mask, ma.gamma + mb.gamma}, (ca * cb) * scalar);
    }
  }
  return out;
}

Element lambda_element(int genus) {
  const auto shape = RingShape::surface(genus);
  Element out(shape);
  for (int i = 0; i < genus; ++i) {
    out.add_term(Monomial{1U << i, 0}, GroupRingElement::one_minus(shape, genus + i));
    out.add_term(Monomial{1U << (genus + i), 0}, -GroupRingElement::one_minus(shape, i));
  }
  return out;
}

Element sigma_element(int genus, int m) {
  if (m < 1 || m > genus) throw std::out_of_range("sigma index must satisfy 1 <= m <= g");
  const auto shape = RingShape::surface(genus);
  Element out(shape);
  // e_i f_i pairs commute with each other, so each product is the sorted
  // monomial times the sign of e_i1 f_i1 ... e_im f_im.
  for (std::uint32_t subset : exterior_masks(genus, m)) {
    Element product = Element::one(shape);
    for (int i = 0; i < genus; ++i) {
      if (!((subset >> i) & 1U)) continue;
      product = multiply(product, multiply(exterior_generator(shape, i), exterior_generator(shape, genus + i)));
    }
    out += product;
  }
  return out;
}

Element boundary(const Element& a, const Conventions& conv) {
  const auto& shape = a.shape();
  Element out(shape);
  const int gens = exterior_generators(shape);
  // lambda coefficients, only needed for divided powers.
  std::vector<GroupRingElement> lambda_coeff;
  if (has_divided_powers(shape)) {
    const int g = shape.rank;
    for (int j = 0; j < gens; ++j) {
      lambda_coeff.push_back(j < g ? GroupRingElement::one_minus(shape, g + j)
                                   : -GroupRingElement::one_minus(shape, j - g));
    }
  }
  for (const auto& [m, c] : a.terms()) {
    // d(g_j1 ... g_jr gamma^(s)) = sum_t (-1)^t d(g_jt) (...omit...) gamma^(s)
    //                             + (-1)^r g_j1 ... g_jr lambda gamma^(s-1)
    int position = 0;
    for (int j = 0; j < gens; ++j) {
      if (!((m.mask >> j) & 1U)) continue;
      auto coeff = generator_boundary(shape, j, conv) * c;
      if (position & 1) coeff = -coeff;
      out.add_term(Monomial{m.mask & ~(1U << j), m.gamma}, coeff);
      ++position;
    }
    if (m.gamma > 0) {
      const int r = m.exterior_degree();
      for (int j = 0; j < gens; ++j) {
        if ((m.mask >> j) & 1U) continue;
        // Moving e_j from the right end into sorted position passes every
        // generator of the mask with a larger index.
        const int passes = popcount(j + 1 >= 32 ? 0U : m.mask >> (j + 1));
        auto coeff = lambda_coeff[static_cast<std::size_t>(j)] * c;
        if ((r + passes) & 1) coeff = -coeff;
        out.add_term(Monomial{m.mask | (1U << j), m.gamma - 1}, coeff);
      }
    }
  }
  return out;
}

}  // namespace sympow::dga
