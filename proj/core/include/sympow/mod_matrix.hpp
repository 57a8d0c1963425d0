#pragma once

#include <cstdint>
#include <vector>

namespace sympow {

/// Arithmetic in Z/p for primes below 2^63.
namespace modp {
std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
/// Requires a != 0 mod p.
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);
}  // namespace modp

// Dense matrix over Z/p, row-major.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t prime);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t prime() const { return prime_; }

  std::uint64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rank() const;
  /// Basis of the right null space, one vector (of length cols) per entry.
  std::vector<std::vector<std::uint64_t>> kernel() const;
  std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& v) const;
  bool is_zero() const;

  /// Matrix whose columns are the given vectors (all of length `rows`).
  static ModMatrix from_columns(const std::vector<std::vector<std::uint64_t>>& columns,
                                std::size_t rows, std::uint64_t prime);

  friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);

 private:
  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> row_reduce();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint64_t prime_ = 2;
  std::vector<std::uint64_t> data_;
};

}  // namespace sympow
