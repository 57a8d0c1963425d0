#include "sympow/mod_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace sympow {

namespace modp {

std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul(result, base, p);
    base = mul(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("modp::inverse of zero");
  return pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace modp

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t prime)
    : rows_(rows), cols_(cols), prime_(prime), data_(rows * cols, 0) {}

std::vector<std::size_t> ModMatrix::row_reduce() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pivot = rows_;
    for (std::size_t i = r; i < rows_; ++i) {
      if ((*this)(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows_) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(r, j), (*this)(pivot, j));
    }
    const std::uint64_t inv = modp::inverse((*this)(r, c), prime_);
    for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = modp::mul((*this)(r, j), inv, prime_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const std::uint64_t f = (*this)(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols_; ++j) {
        (*this)(i, j) = modp::sub((*this)(i, j), modp::mul(f, (*this)(r, j), prime_), prime_);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t ModMatrix::rank() const {
  ModMatrix copy = *this;
  return copy.row_reduce().size();
}

std::vector<std::vector<std::uint64_t>> ModMatrix::kernel() const {
  ModMatrix reduced = *this;
  const auto pivots = reduced.row_reduce();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(cols_, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = modp::sub(0, reduced(i, free), prime_);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::uint64_t> ModMatrix::apply(const std::vector<std::uint64_t>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("ModMatrix::apply: length mismatch");
  std::vector<std::uint64_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto a = (*this)(i, j);
      if (a != 0 && v[j] != 0) acc = modp::add(acc, modp::mul(a, v[j], prime_), prime_);
    }
    out[i] = acc;
  }
  return out;
}

bool ModMatrix::is_zero() const {
  for (auto v : data_) {
    if (v != 0) return false;
  }
  return true;
}

ModMatrix ModMatrix::from_columns(const std::vector<std::vector<std::uint64_t>>& columns,
                                  std::size_t rows, std::uint64_t prime) {
  ModMatrix m(rows, columns.size(), prime);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("ModMatrix::from_columns: length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i] % prime;
  }
  return m;
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.cols() != b.rows() || a.prime() != b.prime()) {
    throw std::invalid_argument("ModMatrix product: shape or prime mismatch");
  }
  const auto p = a.prime();
  ModMatrix out(a.rows(), b.cols(), p);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = modp::add(out(i, j), modp::mul(aik, b(k, j), p), p);
      }
    }
  }
  return out;
}

}  // namespace sympow
