#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "sympow/int_matrix.hpp"

namespace sympow::homology {

/// Smith normal form invariants d1 | d2 | ... of an integer matrix; the list
/// has min(rows, cols) entries with zeros trailing.
struct SnfResult {
  std::vector<mpz_class> diagonal;

  std::size_t rank() const;
  /// Invariant factors greater than one.
  std::vector<mpz_class> torsion() const;
  bool is_divisibility_chain() const;
};

/// Unit pivots are eliminated sparsely first (Markowitz order); whatever is
/// left is reduced densely with smallest-magnitude pivoting.
SnfResult smith_normal_form(const IntMatrix& m);

}  // namespace sympow::homology
