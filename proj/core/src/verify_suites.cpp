#include <stdexcept>
#include <utility>

#include <fmt/format.h>

#include "sympow/verify.hpp"

namespace sympow::verify {

namespace {

using GridPoint = std::pair<int, int>;

std::vector<GridPoint> filter(const std::vector<GridPoint>& grid, const std::optional<int>& first,
                              const std::optional<int>& second) {
  if (first && second) return {{*first, *second}};
  std::vector<GridPoint> out;
  for (const auto& p : grid) {
    if ((!first || p.first == *first) && (!second || p.second == *second)) out.push_back(p);
  }
  if (out.empty()) throw std::invalid_argument("no default grid point matches the given parameters");
  return out;
}

std::vector<int> cover_moduli(const SuiteParams& params) {
  if (!params.modulus) return {1, 2};
  if (*params.modulus < 1) throw std::invalid_argument("N must be >= 1");
  if (*params.modulus == 1) return {1};
  return {1, *params.modulus};
}

Report run_dga(const SuiteParams& p) {
  std::vector<int> genera = p.genus ? std::vector<int>{*p.genus} : std::vector<int>{1, 2, 3};
  const int k = p.k.value_or(6);
  Report out{"dga", {}};
  for (int g : genera) out.append(verify_dga_suite(g, k, p.opts.seed, p.conv));
  return out;
}

Report run_torus(const SuiteParams& p) {
  std::vector<GridPoint> grid;
  for (int n = 2; n <= 6; ++n) {
    for (int k = 2; k <= n; ++k) grid.emplace_back(n, k);
  }
  Report out{"lemma-torus", {}};
  for (auto [n, k] : filter(grid, p.arity, p.k)) out.append(verify_lemma_torus(n, k, p.opts, p.conv));
  return out;
}

Report run_q(const SuiteParams& p) {
  std::vector<GridPoint> grid;
  for (int g = 1; g <= 3; ++g) {
    for (int k = 1; k <= 2 * g; ++k) grid.emplace_back(g, k);
  }
  Report out{"lemma-q", {}};
  for (auto [g, k] : filter(grid, p.genus, p.k)) out.append(verify_lemma_q(g, k, p.opts));
  return out;
}

Report run_cohomology(const SuiteParams& p) {
  std::vector<int> genera = p.genus ? std::vector<int>{*p.genus} : std::vector<int>{2, 3};
  Report out{"lemma-cohomology", {}};
  for (int g : genera) out.append(verify_lemma_cohomology(g, p.opts, p.conv));
  return out;
}

Report run_theorem(const SuiteParams& p) {
  const std::vector<GridPoint> grid = {{1, 2}, {2, 2}, {2, 3}, {2, 4}, {2, 5}};
  Report out{"theorem-main", {}};
  for (auto [g, k] : filter(grid, p.genus, p.k)) out.append(verify_theorem_main(g, k, p.opts, cover_moduli(p), p.conv));
  return out;
}

Report run_nonfg(const SuiteParams& p) {
  const std::vector<GridPoint> grid = {{2, 2}, {3, 2}, {3, 3}, {3, 4}};
  Report out{"nonfg", {}};
  for (auto [g, k] : filter(grid, p.genus, p.k)) {
    for (const auto& w : admissible_witnesses(g, k)) out.append(verify_nonfg_witness(g, k, w));
  }
  return out;
}

Report run_mattuck(const SuiteParams& p) {
  const std::vector<GridPoint> grid = {{1, 2}, {1, 3}, {2, 4}, {2, 5}};
  Report out{"mattuck", {}};
  for (auto [g, k] : filter(grid, p.genus, p.k)) out.append(verify_mattuck(g, k, p.opts, cover_moduli(p)));
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"dga",           "lemma-torus", "lemma-q", "lemma-cohomology",
                                                 "theorem-main", "nonfg",       "mattuck"};
  return names;
}

Report run_suite(const std::string& name, const SuiteParams& params) {
  if (params.opts.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!modp::is_prime(params.opts.prime) || params.opts.prime < 3) {
    throw std::invalid_argument("prime must be an odd prime");
  }
  if (name == "dga") return run_dga(params);
  if (name == "lemma-torus") return run_torus(params);
  if (name == "lemma-q") return run_q(params);
  if (name == "lemma-cohomology") return run_cohomology(params);
  if (name == "theorem-main") return run_theorem(params);
  if (name == "nonfg") return run_nonfg(params);
  if (name == "mattuck") return run_mattuck(params);
  if (name == "all") {
    Report out{"all", {}};
    for (const auto& s : suite_names()) out.append(run_suite(s, params));
    return out;
  }
  throw std::invalid_argument(fmt::format("unknown suite '{}'", name));
}

}  // namespace sympow::verify
