#include "sympow/int_matrix.hpp"

#include <stdexcept>

namespace sympow {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), columns_(cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].emplace(i, 1);
  return m;
}

void IntMatrix::add(std::size_t row, std::size_t col, const mpz_class& value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("IntMatrix::add index");
  if (value == 0) return;
  auto& column = columns_[col];
  auto [it, inserted] = column.try_emplace(row, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) column.erase(it);
  }
}

void IntMatrix::set(std::size_t row, std::size_t col, const mpz_class& value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("IntMatrix::set index");
  if (value == 0) {
    columns_[col].erase(row);
  } else {
    columns_[col][row] = value;
  }
}

mpz_class IntMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("IntMatrix::at index");
  const auto& column = columns_[col];
  auto it = column.find(row);
  return it == column.end() ? mpz_class(0) : it->second;
}

std::size_t IntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix product: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (const auto& [k, bkj] : b.column(j)) {
      for (const auto& [i, aik] : a.column(k)) out.add(i, j, aik * bkj);
    }
  }
  return out;
}

}  // namespace sympow
