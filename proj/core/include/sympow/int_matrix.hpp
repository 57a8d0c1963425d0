#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace sympow {

// Sparse integer matrix, column-major. Zero entries are never stored.
class IntMatrix {
 public:
  using Column = std::map<std::size_t, mpz_class>;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void add(std::size_t row, std::size_t col, const mpz_class& value);
  void set(std::size_t row, std::size_t col, const mpz_class& value);
  mpz_class at(std::size_t row, std::size_t col) const;
  const Column& column(std::size_t col) const { return columns_.at(col); }

  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Column> columns_;
};

}  // namespace sympow
