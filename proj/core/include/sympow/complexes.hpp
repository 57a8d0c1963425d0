#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sympow/dga.hpp"
#include "sympow/groupring.hpp"
#include "sympow/int_matrix.hpp"
#include "sympow/mod_matrix.hpp"

namespace sympow::complexes {

using dga::Monomial;
using groupring::GroupRingElement;
using groupring::RingShape;
using groupring::UnitSpecialization;

enum class ComplexCase { wedge, surface_cover, quotient_q, lambda_complex };

std::string to_string(ComplexCase c);

/// Free Z[pi]-module with an explicit, canonically ordered monomial basis.
class BasedFreeModule {
 public:
  BasedFreeModule() = default;
  explicit BasedFreeModule(std::vector<Monomial> basis);

  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  std::optional<std::size_t> index_of(const Monomial& m) const;

 private:
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
};

/// Matrix with group-ring entries, stored column-major by source basis.
class SparseRingMatrix {
 public:
  using Column = std::map<std::size_t, GroupRingElement>;

  SparseRingMatrix(RingShape shape, std::size_t rows, std::size_t cols);

  const RingShape& shape() const { return shape_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Column& column(std::size_t col) const { return columns_.at(col); }

  void add(std::size_t row, std::size_t col, const GroupRingElement& value);
  GroupRingElement at(std::size_t row, std::size_t col) const;
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  ModMatrix specialize(const UnitSpecialization& s) const;
  /// Each entry replaced by its regular-representation block over (Z/N)^v.
  IntMatrix base_change(int modulus) const;

  friend SparseRingMatrix operator*(const SparseRingMatrix& a, const SparseRingMatrix& b);
  friend bool operator==(const SparseRingMatrix&, const SparseRingMatrix&) = default;

 private:
  RingShape shape_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Column> columns_;
};

/// Finite complex of based free Z[pi]-modules.
///
/// modules()[d] is the chain group in degree d; boundary(d) maps degree d to
/// degree d - 1. Cochain-style complexes (the quotient Q_k and the lambda
/// complex) are stored with their arrows pointing down in degree; for them
/// position(d) recovers the exterior degree the map originates from.
class ChainComplex {
 public:
  ChainComplex(ComplexCase kind, RingShape shape, int k, std::vector<BasedFreeModule> modules,
               std::vector<SparseRingMatrix> boundaries, std::optional<int> position_anchor = std::nullopt);

  ComplexCase kind() const { return kind_; }
  const RingShape& shape() const { return shape_; }
  /// Weight cap / truncation parameter the complex was built with.
  int k() const { return k_; }
  int top_degree() const { return static_cast<int>(modules_.size()) - 1; }

  const BasedFreeModule& module(int degree) const;
  std::size_t rank(int degree) const;
  std::vector<std::size_t> ranks() const;
  /// Boundary from degree `degree` to `degree - 1`, for 1 <= degree <= top.
  const SparseRingMatrix& boundary_matrix(int degree) const;

  bool is_cochain_style() const { return position_anchor_.has_value(); }
  /// Exterior degree (lambda-complex position) of the given chain degree.
  int position(int degree) const;
  int degree_of_position(int position) const;

 private:
  ComplexCase kind_;
  RingShape shape_;
  int k_;
  std::vector<BasedFreeModule> modules_;
  std::vector<SparseRingMatrix> boundaries_;  // index d - 1 holds boundary(d)
  std::optional<int> position_anchor_;
};

const SparseRingMatrix& boundary_matrix(const ChainComplex& c, int degree);

/// Truncated chain complex of the cover of Sym^k of a wedge of n circles:
/// Z[z^±] (x) Lambda[e1..en] in degrees 0..k.
ChainComplex build_wedge_complex(int arity, int k, const dga::Conventions& conv = {});

/// Chain complex of the universal cover of Sym^k(Sigma_g): all monomials of
/// weight <= k, with the derivation boundary.
ChainComplex build_cover_complex(int genus, int k, const dga::Conventions& conv = {});

/// Quotient Q_k = C U_k / C U_{k-1}, in its lambda-multiplication form
/// C_0 -> C_1 -> ... -> C_min(k,2g). The basis monomial for exterior degree i
/// is e_J * gamma^(k-i), placed in chain degree 2k - i.
ChainComplex build_Q_complex(int genus, int k);

/// Full lambda complex C_0 -> C_1 -> ... -> C_2g on exterior monomials;
/// exterior degree i sits in chain degree 2g - i.
ChainComplex build_lambda_complex(int genus);

/// Integer chain complex, e.g. the cellular complex of a finite cover.
struct IntChainComplex {
  ComplexCase kind;
  RingShape shape;
  int k = 0;
  int modulus = 1;
  std::vector<std::size_t> ranks;        // ranks[d]
  std::vector<IntMatrix> boundaries;     // boundaries[d - 1]: degree d -> d - 1

  int top_degree() const { return static_cast<int>(ranks.size()) - 1; }
  const IntMatrix& boundary(int degree) const;
};

/// Complex over Z/p obtained by evaluating every entry at a unit specialization.
struct ModChainComplex {
  std::uint64_t prime = 0;
  std::vector<std::size_t> ranks;
  std::vector<ModMatrix> boundaries;  // boundaries[d - 1]: degree d -> d - 1

  int top_degree() const { return static_cast<int>(ranks.size()) - 1; }
  const ModMatrix& boundary(int degree) const;
};

/// Base change along Z[pi] -> Z[(Z/N)^v]: the cellular complex of the
/// (Z/N)^v-cover.
IntChainComplex base_change(const ChainComplex& c, int modulus);

ModChainComplex specialize_complex(const ChainComplex& c, const UnitSpecialization& s);

/// Line-oriented `SYMPOW-COMPLEX v1` export.
std::string export_text(const ChainComplex& c);
/// JSON mirror of export_text.
std::string export_json(const ChainComplex& c);

}  // namespace sympow::complexes
