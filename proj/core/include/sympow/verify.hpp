#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sympow/dga.hpp"
#include "sympow/homology.hpp"

namespace sympow::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  void add(std::string name, bool pass, std::string detail);
  void append(const Report& other);
};

/// Random-specialization settings shared by the verifiers.
struct Options {
  int trials = 5;
  std::uint64_t seed = 1;
  std::uint64_t prime = homology::kVerifyPrime;
  int threads = 0;

  homology::GenericOptions generic() const { return {trials, seed, prime, threads}; }
};

/// d^2 = 0, graded Leibniz, graded commutativity, divided powers and the
/// weight filtration, exhaustively on monomials of weight <= k and on 100 seeded
/// random elements.
Report verify_dga_suite(int genus, int k, std::uint64_t seed, const dga::Conventions& conv = {});

/// Truncated wedge complex: generic homology vanishes below degree k and the
/// top kernel has dimension binomial(n - 1, k).
Report verify_lemma_torus(int arity, int k, const Options& opts, const dga::Conventions& conv = {});

/// Generic cohomology of the truncated lambda complex sits in the top position.
Report verify_lemma_q(int genus, int k, const Options& opts);

/// The lambda complex on the cycle modules K_*, its classes lambda*sigma_m,
/// and the identity d(sigma_m) = -lambda sigma_{m-1}.
Report verify_lemma_cohomology(int genus, const Options& opts, const dga::Conventions& conv = {});

/// Fraction-field shadow of the homology of the universal cover plus
/// finite-cover checks for each modulus in `moduli`.
Report verify_theorem_main(int genus, int k, const Options& opts, const std::vector<int>& moduli,
                           const dga::Conventions& conv = {});

/// Indices for a = e_1 e_{i1} ... e_{im} f_{j1} ... f_{jn}; all indices in 2..g.
struct WitnessChoice {
  std::vector<int> e_indices;
  std::vector<int> f_indices;
};

std::vector<WitnessChoice> admissible_witnesses(int genus, int k);

/// Evaluation x1 -> 0, every other generator -> 1. Defined on elements whose
/// coefficients have no negative power of x1.
dga::Element evaluate_F(const dga::Element& a);

Report verify_nonfg_witness(int genus, int k, const WitnessChoice& choice);

/// k >= 2g: the universal cover has the homology of CP^(k-g).
Report verify_mattuck(int genus, int k, const Options& opts, const std::vector<int>& moduli);

/// Suite names in the order `all` runs them.
const std::vector<std::string>& suite_names();

struct SuiteParams {
  std::optional<int> genus;
  std::optional<int> arity;
  std::optional<int> k;
  std::optional<int> modulus;
  Options opts;
  dga::Conventions conv;
};

/// Runs one named suite (or `all`). Parameters left unset fall back to the
/// suite's default grid. Throws std::invalid_argument on unknown names or
/// parameters outside a verifier's domain.
Report run_suite(const std::string& name, const SuiteParams& params);

std::string to_json(const Report& report, const SuiteParams& params);
std::string to_csv(const Report& report);
std::string to_text(const Report& report);

}  // namespace sympow::verify
