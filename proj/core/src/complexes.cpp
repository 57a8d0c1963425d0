#include "sympow/complexes.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace sympow::complexes {

std::string to_string(ComplexCase c) {
  switch (c) {
    case ComplexCase::wedge: return "wedge";
    case ComplexCase::surface_cover: return "surface-cover";
    case ComplexCase::quotient_q: return "quotient-Q";
    case ComplexCase::lambda_complex: return "lambda-complex";
  }
  return "unknown";
}

BasedFreeModule::BasedFreeModule(std::vector<Monomial> basis) : basis_(std::move(basis)) {
  std::sort(basis_.begin(), basis_.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (!index_.emplace(basis_[i], i).second) throw std::invalid_argument("duplicate basis monomial");
  }
}

std::optional<std::size_t> BasedFreeModule::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseRingMatrix::SparseRingMatrix(RingShape shape, std::size_t rows, std::size_t cols)
    : shape_(shape), rows_(rows), cols_(cols), columns_(cols) {}

void SparseRingMatrix::add(std::size_t row, std::size_t col, const GroupRingElement& value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("SparseRingMatrix::add index");
  if (value.is_zero()) return;
  auto& column = columns_[col];
  auto [it, inserted] = column.try_emplace(row, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) column.erase(it);
  }
}

GroupRingElement SparseRingMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("SparseRingMatrix::at index");
  const auto& column = columns_[col];
  auto it = column.find(row);
  return it == column.end() ? GroupRingElement::zero(shape_) : it->second;
}

std::size_t SparseRingMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

ModMatrix SparseRingMatrix::specialize(const UnitSpecialization& s) const {
  ModMatrix out(rows_, cols_, s.prime);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (const auto& [i, entry] : columns_[j]) out(i, j) = groupring::specialize(entry, s);
  }
  return out;
}

IntMatrix SparseRingMatrix::base_change(int modulus) const {
  const std::size_t block = groupring::finite_quotient_order(shape_, modulus);
  IntMatrix out(rows_ * block, cols_ * block);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (const auto& [i, entry] : columns_[j]) {
      const IntMatrix q = groupring::finite_quotient(entry, modulus);
      for (std::size_t bc = 0; bc < block; ++bc) {
        for (const auto& [br, v] : q.column(bc)) out.add(i * block + br, j * block + bc, v);
      }
    }
  }
  return out;
}

SparseRingMatrix operator*(const SparseRingMatrix& a, const SparseRingMatrix& b) {
  if (a.cols_ != b.rows_ || !(a.shape_ == b.shape_)) {
    throw std::invalid_argument("SparseRingMatrix product: shape mismatch");
  }
  SparseRingMatrix out(a.shape_, a.rows_, b.cols_);
  for (std::size_t j = 0; j < b.cols_; ++j) {
    for (const auto& [k, bkj] : b.columns_[j]) {
      for (const auto& [i, aik] : a.columns_[k]) out.add(i, j, aik * bkj);
    }
  }
  return out;
}

ChainComplex::ChainComplex(ComplexCase kind, RingShape shape, int k, std::vector<BasedFreeModule> modules,
                           std::vector<SparseRingMatrix> boundaries, std::optional<int> position_anchor)
    : kind_(kind),
      shape_(shape),
      k_(k),
      modules_(std::move(modules)),
      boundaries_(std::move(boundaries)),
      position_anchor_(position_anchor) {
  if (modules_.empty()) throw std::invalid_argument("chain complex needs at least one module");
  if (boundaries_.size() + 1 != modules_.size()) throw std::invalid_argument("one boundary per positive degree");
  for (std::size_t d = 1; d < modules_.size(); ++d) {
    const auto& m = boundaries_[d - 1];
    if (m.cols() != modules_[d].rank() || m.rows() != modules_[d - 1].rank()) {
      throw std::invalid_argument(fmt::format("boundary {} has the wrong shape", d));
    }
  }
}

const BasedFreeModule& ChainComplex::module(int degree) const {
  if (degree < 0 || degree > top_degree()) throw std::out_of_range("module degree out of range");
  return modules_[static_cast<std::size_t>(degree)];
}

std::size_t ChainComplex::rank(int degree) const {
  if (degree < 0 || degree > top_degree()) return 0;
  return modules_[static_cast<std::size_t>(degree)].rank();
}

std::vector<std::size_t> ChainComplex::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& m : modules_) out.push_back(m.rank());
  return out;
}

const SparseRingMatrix& ChainComplex::boundary_matrix(int degree) const {
  if (degree < 1 || degree > top_degree()) {
    throw std::out_of_range(fmt::format("boundary degree {} outside 1..{}", degree, top_degree()));
  }
  return boundaries_[static_cast<std::size_t>(degree - 1)];
}

int ChainComplex::position(int degree) const {
  if (!position_anchor_) throw std::logic_error("positions only exist for cochain-style complexes");
  return *position_anchor_ - degree;
}

int ChainComplex::degree_of_position(int position) const {
  if (!position_anchor_) throw std::logic_error("positions only exist for cochain-style complexes");
  return *position_anchor_ - position;
}

const SparseRingMatrix& boundary_matrix(const ChainComplex& c, int degree) { return c.boundary_matrix(degree); }

namespace {

// Matrix of a linear map given on basis monomials, landing in `target`.
template <typename MapFn>
SparseRingMatrix matrix_of(const RingShape& shape, const BasedFreeModule& source, const BasedFreeModule& target,
                           MapFn&& map) {
  SparseRingMatrix out(shape, target.rank(), source.rank());
  for (std::size_t col = 0; col < source.rank(); ++col) {
    const dga::Element image = map(source.basis()[col]);
    for (const auto& [m, c] : image.terms()) {
      const auto row = target.index_of(m);
      if (!row) {
        throw std::logic_error(fmt::format("image of {} leaves the target basis at {}",
                                           dga::to_string(source.basis()[col], shape), dga::to_string(m, shape)));
      }
      out.add(*row, col, c);
    }
  }
  return out;
}

ChainComplex from_boundary(ComplexCase kind, const RingShape& shape, int k, std::vector<BasedFreeModule> modules,
                           const dga::Conventions& conv) {
  std::vector<SparseRingMatrix> boundaries;
  for (std::size_t d = 1; d < modules.size(); ++d) {
    boundaries.push_back(matrix_of(shape, modules[d], modules[d - 1], [&](const Monomial& m) {
      return dga::boundary(dga::Element::monomial(shape, m), conv);
    }));
  }
  return ChainComplex(kind, shape, k, std::move(modules), std::move(boundaries));
}

// Left multiplication by lambda from exterior degree i to i + 1. Basis
// monomials carry gamma^(k - i) in Q_k and no gamma in the plain lambda complex.
ChainComplex lambda_chain(ComplexCase kind, int genus, int k, int last_position, int anchor, bool with_gamma) {
  const auto shape = RingShape::surface(genus);
  const int gens = 2 * genus;
  const auto lambda = dga::lambda_element(genus);
  const auto gamma_at = [&](int position) { return with_gamma ? k - position : 0; };

  std::vector<BasedFreeModule> modules(static_cast<std::size_t>(anchor + 1));
  for (int i = 0; i <= last_position; ++i) {
    std::vector<Monomial> basis;
    for (auto mask : dga::exterior_masks(gens, i)) basis.push_back(Monomial{mask, gamma_at(i)});
    modules[static_cast<std::size_t>(anchor - i)] = BasedFreeModule(std::move(basis));
  }

  std::vector<SparseRingMatrix> boundaries;
  for (int d = 1; d <= anchor; ++d) {
    const int i = anchor - d;  // source position
    const auto& source = modules[static_cast<std::size_t>(d)];
    const auto& target = modules[static_cast<std::size_t>(d - 1)];
    boundaries.push_back(matrix_of(shape, source, target, [&](const Monomial& m) {
      if (i + 1 > last_position) return dga::Element(shape);  // truncated: C_last -> 0
      const auto product = dga::multiply(lambda, dga::Element::monomial(shape, Monomial{m.mask, 0}));
      dga::Element shifted(shape);
      for (const auto& [pm, c] : product.terms()) shifted.add_term(Monomial{pm.mask, gamma_at(i + 1)}, c);
      return shifted;
    }));
  }
  return ChainComplex(kind, shape, k, std::move(modules), std::move(boundaries), anchor);
}

}  // namespace

ChainComplex build_wedge_complex(int arity, int k, const dga::Conventions& conv) {
  const auto shape = RingShape::wedge(arity);
  if (k < 0) throw std::invalid_argument("truncation must be >= 0");
  if (k > arity) throw std::invalid_argument(fmt::format("no cells beyond degree {} in a wedge of {} circles", arity, arity));
  std::vector<BasedFreeModule> modules;
  for (int d = 0; d <= k; ++d) {
    std::vector<Monomial> basis;
    for (auto mask : dga::exterior_masks(arity, d)) basis.push_back(Monomial{mask, 0});
    modules.emplace_back(std::move(basis));
  }
  return from_boundary(ComplexCase::wedge, shape, k, std::move(modules), conv);
}

ChainComplex build_cover_complex(int genus, int k, const dga::Conventions& conv) {
  const auto shape = RingShape::surface(genus);
  if (k < 0) throw std::invalid_argument("weight cap must be >= 0");
  const int gens = 2 * genus;
  std::map<int, std::vector<Monomial>> by_degree;
  for (int j = 0; j <= std::min(gens, k); ++j) {
    for (int s = 0; j + s <= k; ++s) {
      for (auto mask : dga::exterior_masks(gens, j)) by_degree[j + 2 * s].push_back(Monomial{mask, s});
    }
  }
  const int top = by_degree.rbegin()->first;
  std::vector<BasedFreeModule> modules;
  for (int d = 0; d <= top; ++d) modules.emplace_back(by_degree[d]);
  return from_boundary(ComplexCase::surface_cover, shape, k, std::move(modules), conv);
}

ChainComplex build_Q_complex(int genus, int k) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  if (k < 1) throw std::invalid_argument("Q_k needs k >= 1");
  return lambda_chain(ComplexCase::quotient_q, genus, k, std::min(k, 2 * genus), 2 * k, true);
}

ChainComplex build_lambda_complex(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  return lambda_chain(ComplexCase::lambda_complex, genus, 2 * genus, 2 * genus, 2 * genus, false);
}

const IntMatrix& IntChainComplex::boundary(int degree) const {
  if (degree < 1 || degree > top_degree()) throw std::out_of_range("integer boundary degree out of range");
  return boundaries[static_cast<std::size_t>(degree - 1)];
}

const ModMatrix& ModChainComplex::boundary(int degree) const {
  if (degree < 1 || degree > top_degree()) throw std::out_of_range("modular boundary degree out of range");
  return boundaries[static_cast<std::size_t>(degree - 1)];
}

IntChainComplex base_change(const ChainComplex& c, int modulus) {
  const std::size_t block = groupring::finite_quotient_order(c.shape(), modulus);
  IntChainComplex out{c.kind(), c.shape(), c.k(), modulus, {}, {}};
  for (int d = 0; d <= c.top_degree(); ++d) out.ranks.push_back(c.rank(d) * block);
  for (int d = 1; d <= c.top_degree(); ++d) out.boundaries.push_back(c.boundary_matrix(d).base_change(modulus));
  return out;
}

ModChainComplex specialize_complex(const ChainComplex& c, const UnitSpecialization& s) {
  s.validate(c.shape());
  ModChainComplex out;
  out.prime = s.prime;
  out.ranks = c.ranks();
  for (int d = 1; d <= c.top_degree(); ++d) out.boundaries.push_back(c.boundary_matrix(d).specialize(s));
  return out;
}

}  // namespace sympow::complexes
