#include <gtest/gtest.h>

#include <json.hpp>

#include "helpers.hpp"
#include "sympow/complexes.hpp"
#include "sympow/homology.hpp"

namespace sympow::testing {
namespace {

using Ranks = std::vector<std::size_t>;
using complexes::IntChainComplex;
using groupring::UnitSpecialization;

/// Betti numbers from the coefficient of x^k in (1 + t x)^{2g} / ((1 - x)(1 - t^2 x)).
std::vector<std::uint64_t> series_oracle(int g, int k) {
  // series[w][d]: coefficient of x^w t^d
  std::vector<std::vector<std::uint64_t>> series(static_cast<std::size_t>(k + 1),
                                                 std::vector<std::uint64_t>(static_cast<std::size_t>(2 * k + 1), 0));
  series[0][0] = 1;
  for (int f = 0; f < 2 * g; ++f) {
    for (int w = k; w >= 1; --w) {
      for (int d = 2 * k; d >= 1; --d) series[w][d] += series[w - 1][d - 1];
    }
  }
  for (int w = 1; w <= k; ++w) {
    for (int d = 0; d <= 2 * k; ++d) series[w][d] += series[w - 1][d];  // 1 / (1 - x)
  }
  for (int w = 1; w <= k; ++w) {
    for (int d = 2; d <= 2 * k; ++d) series[w][d] += series[w - 1][d - 2];  // 1 / (1 - t^2 x)
  }
  auto out = series[static_cast<std::size_t>(k)];
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return out;
}

TEST(Betti, Examples) {
  EXPECT_EQ(homology::betti_symmetric_power(1, 1), (std::vector<std::uint64_t>{1, 2, 1}));
  EXPECT_EQ(homology::betti_symmetric_power(2, 1), (std::vector<std::uint64_t>{1, 4, 1}));
  EXPECT_EQ(homology::betti_symmetric_power(2, 2), (std::vector<std::uint64_t>{1, 4, 7, 4, 1}));
  EXPECT_EQ(homology::betti_symmetric_power(3, 0), (std::vector<std::uint64_t>{1}));
  EXPECT_THROW(homology::betti_symmetric_power(0, 1), std::invalid_argument);
  EXPECT_THROW(homology::betti_symmetric_power(1, -1), std::invalid_argument);
}

TEST(Betti, MatchesGeneratingFunction) {
  for (int g = 1; g <= 4; ++g) {
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(homology::betti_symmetric_power(g, k), series_oracle(g, k)) << g << "," << k;
  }
}

TEST(Betti, EulerCharacteristic) {
  EXPECT_EQ(homology::euler_characteristic(2, 2), 1);
  EXPECT_EQ(homology::euler_characteristic(1, 1), 0);
  EXPECT_EQ(homology::euler_characteristic(3, 2), 6);
  for (int g = 1; g <= 4; ++g) {
    for (int k = 0; k <= 2 * g - 2; ++k) {
      const long long expected = (k % 2 ? -1 : 1) * static_cast<long long>(binomial(2 * g - 2, k));
      EXPECT_EQ(homology::euler_characteristic(g, k), expected) << g << "," << k;
    }
  }
}

TEST(IntegerHomology, Circle) {
  IntChainComplex circle{complexes::ComplexCase::wedge, RingShape::wedge(1), 1, 1, {1, 1}, {IntMatrix(1, 1)}};
  const auto h = homology::integer_homology(circle);
  EXPECT_EQ(h.ranks(), (Ranks{1, 1}));
  EXPECT_TRUE(h.homology[0].torsion.empty());
}

TEST(IntegerHomology, TorsionAndSquareCheck) {
  IntMatrix two(1, 1);
  two.set(0, 0, 2);
  IntChainComplex rp{complexes::ComplexCase::wedge, RingShape::wedge(1), 1, 1, {1, 1}, {two}};
  const auto h = homology::integer_homology(rp);
  EXPECT_EQ(h.ranks(), (Ranks{0, 0}));
  EXPECT_EQ(h.homology[0].torsion, (std::vector<mpz_class>{2}));

  IntMatrix one(1, 1);
  one.set(0, 0, 1);
  IntChainComplex bad{complexes::ComplexCase::wedge, RingShape::wedge(1), 2, 1, {1, 1, 1}, {one, one}};
  EXPECT_THROW(homology::integer_homology(bad), std::logic_error);
}

TEST(IntegerHomology, TrivialCoverReproducesBetti) {
  for (int g = 1; g <= 3; ++g) {
    for (int k = 0; k <= 6; ++k) {
      const auto h = homology::integer_homology(complexes::base_change(complexes::build_cover_complex(g, k), 1));
      const auto betti = homology::betti_symmetric_power(g, k);
      ASSERT_EQ(h.homology.size(), betti.size());
      for (std::size_t d = 0; d < betti.size(); ++d) {
        EXPECT_EQ(h.homology[d].rank, betti[d]);
        EXPECT_TRUE(h.homology[d].torsion.empty());
      }
    }
  }
  EXPECT_EQ(homology::integer_homology(complexes::base_change(complexes::build_cover_complex(1, 1), 1)).ranks(),
            (Ranks{1, 2, 1}));
}

/// Rational homology of the (Z/2)^{2g} cover, as a sum over the 2^{2g} sign characters.
Ranks character_sum_oracle(const complexes::ChainComplex& c) {
  const int v = c.shape().variables();
  Ranks total(static_cast<std::size_t>(c.top_degree() + 1), 0);
  const std::uint64_t p = 2147483647;
  for (int signs = 0; signs < (1 << v); ++signs) {
    UnitSpecialization s{p, {}};
    for (int j = 0; j < v; ++j) s.values.push_back((signs >> j) & 1 ? p - 1 : 1);
    const auto dims = homology::specialized_homology(complexes::specialize_complex(c, s));
    for (std::size_t d = 0; d < dims.size(); ++d) total[d] += dims[d];
  }
  return total;
}

TEST(IntegerHomology, DoubleCoverMatchesCharacterSum) {
  for (auto [g, k] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}, {2, 3}}) {
    const auto cover = complexes::build_cover_complex(g, k);
    const auto h = homology::integer_homology(complexes::base_change(cover, 2));
    EXPECT_EQ(h.ranks(), character_sum_oracle(cover)) << g << "," << k;
  }
}

TEST(IntegerHomology, DoubleCoverGolden) {
  // Pinned from the SNF engine; equals the character-sum oracle above.
  const auto h = homology::integer_homology(complexes::base_change(complexes::build_cover_complex(2, 2), 2));
  EXPECT_EQ(h.ranks(), (Ranks{1, 4, 22, 4, 1}));
  EXPECT_EQ(h.euler(), 16);
}

TEST(GenericRank, Examples) {
  const auto g1 = RingShape::surface(1);
  complexes::SparseRingMatrix m(g1, 1, 1);
  m.add(0, 0, c(g1, 1) - x(g1, 1));
  EXPECT_EQ(homology::generic_rank(m, 5, 1), 1u);
  EXPECT_EQ(homology::generic_rank(complexes::build_wedge_complex(4, 2).boundary_matrix(2), 5, 1), 3u);
  EXPECT_EQ(homology::generic_rank(complexes::SparseRingMatrix(g1, 3, 2), 5, 1), 0u);
  EXPECT_THROW(homology::generic_rank(m, 0, 1), std::invalid_argument);
}

TEST(GenericRank, MonotoneAndBounded) {
  const auto cover = complexes::build_cover_complex(2, 3);
  for (int d = 1; d <= cover.top_degree(); ++d) {
    const auto& m = cover.boundary_matrix(d);
    std::size_t previous = 0;
    for (int trials = 1; trials <= 4; ++trials) {
      const auto r = homology::generic_rank(m, trials, 9);
      EXPECT_GE(r, previous);
      EXPECT_LE(r, std::min(m.rows(), m.cols()));
      previous = r;
    }
  }
}

TEST(GenericHomology, Examples) {
  EXPECT_EQ(homology::generic_homology(complexes::build_wedge_complex(4, 2)).ranks(), (Ranks{0, 0, 3}));
  EXPECT_EQ(homology::generic_homology(complexes::build_cover_complex(2, 2)).ranks(), (Ranks{0, 0, 1, 0, 0}));
  const auto q = complexes::build_Q_complex(2, 2);
  const auto dims = homology::generic_homology(q).ranks();
  for (int d = 0; d < static_cast<int>(dims.size()); ++d) {
    EXPECT_EQ(dims[static_cast<std::size_t>(d)], d == q.degree_of_position(2) ? 3u : 0u);
  }
}

/// Rank over Z/p by plain Gaussian elimination on a dense copy.
std::size_t oracle_rank(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[rank], a[pivot]);
    const auto inv = modp::inverse(a[rank][c], p);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const auto f = modp::mul(a[r][c], inv, p);
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = modp::sub(a[r][j], modp::mul(f, a[rank][j], p), p);
    }
    ++rank;
  }
  return rank;
}

TEST(GenericHomology, BruteForceSpecializationOracle) {
  // Build the specialized boundary directly from the derivation, bypassing the matrix builder.
  const int g = 2;
  const int k = 2;
  const auto cover = complexes::build_cover_complex(g, k);
  const std::uint64_t p = 2147483647;
  const auto s = UnitSpecialization::random(cover.shape(), p, 1, 0);
  std::vector<std::size_t> ranks(static_cast<std::size_t>(cover.top_degree() + 2), 0);
  for (int d = 1; d <= cover.top_degree(); ++d) {
    std::vector<std::vector<std::uint64_t>> dense(cover.rank(d - 1), std::vector<std::uint64_t>(cover.rank(d), 0));
    for (std::size_t col = 0; col < cover.rank(d); ++col) {
      const auto image = dga::boundary(dga::Element::monomial(cover.shape(), cover.module(d).basis()[col]));
      for (const auto& [m, coeff] : image.terms()) dense[*cover.module(d - 1).index_of(m)][col] = groupring::specialize(coeff, s);
    }
    ranks[static_cast<std::size_t>(d)] = oracle_rank(dense, p);
  }
  Ranks dims;
  for (int d = 0; d <= cover.top_degree(); ++d) {
    dims.push_back(cover.rank(d) - ranks[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d + 1)]);
  }
  EXPECT_EQ(dims, (Ranks{0, 0, 1, 0, 0}));
  homology::GenericOptions opts;
  opts.prime = p;
  EXPECT_EQ(homology::generic_homology(cover, opts).ranks(), dims);
}

TEST(GenericHomology, ThreadCountDoesNotChangeResults) {
  const auto cover = complexes::build_cover_complex(2, 3);
  homology::GenericOptions one{7, 3, homology::kFastPrime, 1};
  homology::GenericOptions four{7, 3, homology::kFastPrime, 4};
  EXPECT_EQ(homology::generic_homology(cover, one).to_json(), homology::generic_homology(cover, four).to_json());
}

TEST(HomologyReport, EulerConservation) {
  for (int g = 1; g <= 2; ++g) {
    for (int k = 1; k <= 4; ++k) {
      const auto cover = complexes::build_cover_complex(g, k);
      long long module_chi = 0;
      for (int d = 0; d <= cover.top_degree(); ++d) module_chi += (d % 2 ? -1 : 1) * static_cast<long long>(cover.rank(d));
      // Over the fraction field every module rank counts once.
      EXPECT_EQ(homology::generic_homology(cover).euler(), module_chi);
      // Integer homology of the N-cover: module ranks scale by N^{2g}.
      const auto base = complexes::base_change(cover, 2);
      long long scaled = 0;
      for (std::size_t d = 0; d < base.ranks.size(); ++d) scaled += (d % 2 ? -1 : 1) * static_cast<long long>(base.ranks[d]);
      EXPECT_EQ(homology::integer_homology(base).euler(), scaled);
    }
  }
}

TEST(HomologyReport, JsonLayout) {
  const auto doc = nlohmann::ordered_json::parse(homology::betti_report(2, 2).to_json());
  std::vector<std::string> keys;
  for (const auto& [key, value] : doc.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"case", "g", "k", "N", "method", "prime", "trials", "seed", "homology", "euler"}));
  EXPECT_EQ(doc["method"], "betti-count");
  EXPECT_EQ(doc["homology"][2]["rank"], 7);
  EXPECT_EQ(doc["euler"], 1);
}

TEST(KernelBasis, ColumnsAreCyclesAndLambdaSquaresToZero) {
  for (int g = 1; g <= 3; ++g) {
    const auto wedge = complexes::build_wedge_complex(2 * g, 2 * g);
    const auto lambda = complexes::build_lambda_complex(g);
    const auto s = UnitSpecialization::random(RingShape::surface(g), homology::kVerifyPrime, 4, 0);
    const auto mw = complexes::specialize_complex(wedge, UnitSpecialization{s.prime, s.values});
    const auto ml = complexes::specialize_complex(lambda, s);
    for (int i = 0; i + 2 <= 2 * g; ++i) {
      const auto basis = homology::kernel_basis(mw, i);
      for (const auto& v : basis.columns) {
        if (i > 0) {
          const auto dv = mw.boundary(i).apply(v);
          EXPECT_TRUE(std::all_of(dv.begin(), dv.end(), [](auto e) { return e == 0; }));
        }
        const auto once = ml.boundary(2 * g - i).apply(v);
        const auto twice = ml.boundary(2 * g - i - 1).apply(once);
        EXPECT_TRUE(std::all_of(twice.begin(), twice.end(), [](auto e) { return e == 0; }));
      }
    }
  }
}

}  // namespace
}  // namespace sympow::testing
