#include "sympow/snf.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <tuple>
#include <utility>

namespace sympow::homology {

std::size_t SnfResult::rank() const {
  return static_cast<std::size_t>(std::count_if(diagonal.begin(), diagonal.end(), [](const mpz_class& d) { return d != 0; }));
}

std::vector<mpz_class> SnfResult::torsion() const {
  std::vector<mpz_class> out;
  for (const auto& d : diagonal) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

bool SnfResult::is_divisibility_chain() const {
  for (std::size_t i = 0; i + 1 < diagonal.size(); ++i) {
    const auto& a = diagonal[i];
    const auto& b = diagonal[i + 1];
    if (a < 0 || b < 0) return false;
    if (a == 0) {
      if (b != 0) return false;
      continue;
    }
    if (b % a != 0) return false;
  }
  return diagonal.empty() || diagonal.back() >= 0;
}

namespace {

using Row = std::map<std::size_t, mpz_class>;

// Eliminates every unit pivot it can find, in Markowitz order. Returns the
// number of pivots removed; consumed rows are cleared.
std::size_t eliminate_units(std::vector<Row>& rows, std::vector<std::set<std::size_t>>& col_rows) {
  std::size_t pivots = 0;
  while (true) {
    std::size_t best_row = rows.size();
    std::size_t best_col = 0;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < rows.size() && best_cost > 0; ++r) {
      const auto& row = rows[r];
      if (row.empty()) continue;
      for (const auto& [c, v] : row) {
        if (v != 1 && v != -1) continue;
        const std::size_t cost = (row.size() - 1) * (col_rows[c].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_row = r;
          best_col = c;
          if (cost == 0) break;
        }
      }
    }
    if (best_row == rows.size()) return pivots;

    const Row pivot_row = rows[best_row];
    const mpz_class pivot = pivot_row.at(best_col);  // +-1, its own inverse
    const std::vector<std::size_t> targets(col_rows[best_col].begin(), col_rows[best_col].end());
    for (std::size_t r : targets) {
      if (r == best_row) continue;
      auto& row = rows[r];
      const mpz_class factor = row.at(best_col) * pivot;
      for (const auto& [c, v] : pivot_row) {
        auto [it, inserted] = row.try_emplace(c, 0);
        it->second -= factor * v;
        if (it->second == 0) {
          row.erase(it);
          col_rows[c].erase(r);
        } else if (inserted) {
          col_rows[c].insert(r);
        }
      }
    }
    for (const auto& [c, v] : pivot_row) col_rows[c].erase(best_row);
    rows[best_row].clear();
    ++pivots;
  }
}

using Dense = std::vector<std::vector<mpz_class>>;

// q = a / b rounded to the nearest integer, so remainders satisfy |r| <= |b| / 2.
mpz_class nearest_quotient(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_class r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * abs(r) > abs(b)) q += (sgn(r) == sgn(b)) ? 1 : -1;
  return q;
}

// Classical elimination on a dense block; appends the invariant factors found.
// Each round moves the smallest nonzero entry of the remaining block to the
// pivot, so the pivot magnitude strictly drops until it divides its row and column.
void dense_snf(Dense a, std::vector<mpz_class>& diagonal) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest magnitude, ties broken by the sparsest row plus column.
      bool found = false;
      std::tuple<mpz_class, std::size_t, std::size_t, std::size_t> best;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (a[i][j] == 0) continue;
          if (found && abs(a[i][j]) > std::get<0>(best)) continue;
          std::size_t fill = 0;
          for (std::size_t jj = t; jj < n; ++jj) fill += a[i][jj] != 0;
          for (std::size_t ii = t; ii < m; ++ii) fill += a[ii][j] != 0;
          auto key = std::make_tuple(mpz_class(abs(a[i][j])), fill, i, j);
          if (!found || key < best) {
            best = key;
            found = true;
          }
        }
      }
      if (!found) return;
      std::swap(a[t], a[std::get<2>(best)]);
      swap_cols(t, std::get<3>(best));
      const mpz_class pivot = a[t][t];

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        const auto q = nearest_quotient(a[i][t], pivot);
        for (std::size_t j = t; j < n; ++j) {
          if (a[t][j] != 0) a[i][j] -= q * a[t][j];
        }
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const auto q = nearest_quotient(a[t][j], pivot);
        for (std::size_t i = t; i < m; ++i) {
          if (a[i][t] != 0) a[i][j] -= q * a[i][t];
        }
        clean = clean && a[t][j] == 0;
      }
      if (!clean) continue;

      // Pivot must divide the remaining block; otherwise fold in the offending row.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[i][j] % pivot != 0) {
            for (std::size_t jj = t + 1; jj < n; ++jj) a[t][jj] += a[i][jj];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diagonal.push_back(abs(a[t][t]));
  }
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  std::vector<Row> rows(m.rows());
  std::vector<std::set<std::size_t>> col_rows(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& [r, v] : m.column(c)) {
      rows[r].emplace(c, v);
      col_rows[c].insert(r);
    }
  }

  SnfResult result;
  const std::size_t units = eliminate_units(rows, col_rows);
  result.diagonal.assign(units, mpz_class(1));

  // Remaining nonzero block.
  std::vector<std::size_t> live_rows;
  std::vector<std::size_t> live_cols;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].empty()) live_rows.push_back(r);
  }
  for (std::size_t c = 0; c < col_rows.size(); ++c) {
    if (!col_rows[c].empty()) live_cols.push_back(c);
  }
  if (!live_rows.empty()) {
    std::map<std::size_t, std::size_t> col_index;
    for (std::size_t j = 0; j < live_cols.size(); ++j) col_index[live_cols[j]] = j;
    Dense dense(live_rows.size(), std::vector<mpz_class>(live_cols.size(), 0));
    for (std::size_t i = 0; i < live_rows.size(); ++i) {
      for (const auto& [c, v] : rows[live_rows[i]]) dense[i][col_index.at(c)] = v;
    }
    dense_snf(std::move(dense), result.diagonal);
  }
  result.diagonal.resize(std::min(m.rows(), m.cols()), mpz_class(0));
  return result;
}

}  // namespace sympow::homology
