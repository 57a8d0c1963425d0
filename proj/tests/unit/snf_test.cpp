#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "sympow/snf.hpp"

namespace sympow::homology {
namespace {

using Diagonal = std::vector<mpz_class>;

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

mpz_class determinant(std::vector<std::vector<mpz_class>> a) {
  // Bareiss fraction-free elimination.
  const std::size_t n = a.size();
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Invariant factors from gcds of i x i minors.
Diagonal determinantal_oracle(const IntMatrix& m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  std::vector<mpz_class> minors_gcd(n + 1, 0);
  minors_gcd[0] = 1;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::function<void(std::size_t, std::size_t, std::size_t)> pick_cols;
  std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t start, std::size_t size) {
    if (rows.size() == size) {
      pick_cols(0, size, 0);
      return;
    }
    for (std::size_t r = start; r < m.rows(); ++r) {
      rows.push_back(r);
      pick_rows(r + 1, size);
      rows.pop_back();
    }
  };
  pick_cols = [&](std::size_t start, std::size_t size, std::size_t) {
    if (cols.size() == size) {
      std::vector<std::vector<mpz_class>> sub(size, std::vector<mpz_class>(size));
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) sub[i][j] = m.at(rows[i], cols[j]);
      }
      mpz_class d = determinant(sub);
      mpz_gcd(minors_gcd[size].get_mpz_t(), minors_gcd[size].get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (std::size_t c = start; c < m.cols(); ++c) {
      cols.push_back(c);
      pick_cols(c + 1, size, 0);
      cols.pop_back();
    }
  };
  for (std::size_t size = 1; size <= n; ++size) pick_rows(0, size);
  Diagonal out;
  for (std::size_t i = 1; i <= n; ++i) {
    if (minors_gcd[i] == 0) {
      out.push_back(0);
    } else {
      out.push_back(minors_gcd[i] / minors_gcd[i - 1]);
    }
  }
  return out;
}

TEST(Snf, Examples) {
  EXPECT_EQ(smith_normal_form(from_rows({{2, 0}, {0, 3}})).diagonal, (Diagonal{1, 6}));
  EXPECT_EQ(smith_normal_form(IntMatrix(3, 2)).diagonal, (Diagonal{0, 0}));
  EXPECT_EQ(smith_normal_form(from_rows({{0}})).diagonal, (Diagonal{0}));
  const auto r = smith_normal_form(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  EXPECT_EQ(r.diagonal, (Diagonal{2, 6, 12}));
  EXPECT_EQ(r.rank(), 3u);
  EXPECT_EQ(r.torsion(), (Diagonal{2, 6, 12}));
}

TEST(Snf, EmptyShapes) {
  EXPECT_TRUE(smith_normal_form(IntMatrix(0, 4)).diagonal.empty());
  EXPECT_TRUE(smith_normal_form(IntMatrix(4, 0)).diagonal.empty());
}

TEST(Snf, MatchesDeterminantalDivisors) {
  std::mt19937_64 gen(2024);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<int> entry(-6, 6);
  std::uniform_int_distribution<int> sparsity(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix m(static_cast<std::size_t>(dim(gen)), static_cast<std::size_t>(dim(gen)));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (sparsity(gen) != 0) m.set(r, c, entry(gen));
      }
    }
    const auto r = smith_normal_form(m);
    EXPECT_EQ(r.diagonal, determinantal_oracle(m)) << "trial " << trial;
    EXPECT_TRUE(r.is_divisibility_chain());
  }
}

TEST(Snf, IdempotentOnItsOutput) {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<int> entry(-20, 20);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m(6, 5);
    for (std::size_t r = 0; r < 6; ++r) {
      for (std::size_t c = 0; c < 5; ++c) m.set(r, c, entry(gen) * (c == 2 ? 2 : 1));
    }
    const auto first = smith_normal_form(m);
    EXPECT_TRUE(first.is_divisibility_chain());
    IntMatrix diag(6, 5);
    for (std::size_t i = 0; i < first.diagonal.size(); ++i) diag.set(i, i, first.diagonal[i]);
    EXPECT_EQ(smith_normal_form(diag).diagonal, first.diagonal);
  }
}

TEST(Snf, LargeEntriesStayExact) {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 40);
  IntMatrix m(2, 2);
  m.set(0, 0, big);
  m.set(1, 1, big * 6);
  const auto r = smith_normal_form(m);
  EXPECT_EQ(r.diagonal, (Diagonal{big, big * 6}));
}

}  // namespace
}  // namespace sympow::homology
