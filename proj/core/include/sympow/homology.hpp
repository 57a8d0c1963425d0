#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include <gmpxx.h>

#include "sympow/complexes.hpp"
#include "sympow/snf.hpp"

namespace sympow::homology {

using complexes::ChainComplex;
using complexes::IntChainComplex;
using complexes::ModChainComplex;
using complexes::SparseRingMatrix;

enum class Method { integer_snf, generic_rank, betti_count };

std::string to_string(Method m);

inline constexpr std::uint64_t kFastPrime = 1000003;
inline constexpr std::uint64_t kVerifyPrime = 2147483647;

/// Parameters of the random-specialization engine. Results depend only on
/// (trials, seed, prime); `threads` never changes the output.
struct GenericOptions {
  int trials = 5;
  std::uint64_t seed = 1;
  std::uint64_t prime = kFastPrime;
  int threads = 0;  // 0: hardware concurrency
};

struct HomologyEntry {
  int degree = 0;
  std::size_t rank = 0;             // free rank, or fraction-field dimension
  std::vector<mpz_class> torsion;   // integer method only
};

struct HomologyReport {
  std::string case_tag;
  int g = 0;  // genus, or arity for the wedge case
  int k = 0;
  int modulus = 1;
  Method method = Method::integer_snf;
  std::uint64_t prime = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<HomologyEntry> homology;

  std::vector<std::size_t> ranks() const;
  long long euler() const;

  std::string to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
};

/// free rank_d = rank C_d - rank d_d - rank d_{d+1}; torsion from d_{d+1}.
HomologyReport integer_homology(const IntChainComplex& c);

/// Runs fn(trial) for trial = 0..count-1 on up to `threads` workers and
/// returns the results in trial order.
template <typename T>
std::vector<T> run_trials(int count, int threads, const std::function<T(int)>& fn) {
  std::vector<T> results(static_cast<std::size_t>(std::max(count, 0)));
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(count, 1));
  if (workers == 1) {
    for (int t = 0; t < count; ++t) results[static_cast<std::size_t>(t)] = fn(t);
    return results;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int t = w; t < count; t += workers) results[static_cast<std::size_t>(t)] = fn(t);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

/// Maximum rank over `trials` seeded unit specializations.
std::size_t generic_rank(const SparseRingMatrix& m, int trials, std::uint64_t seed,
                         std::uint64_t prime = kFastPrime, int threads = 0);

/// Homology dimensions over Z/p of one specialized complex.
std::vector<std::size_t> specialized_homology(const ModChainComplex& c);

/// Fraction-field dimensions: trialwise minimum of specialized homology.
HomologyReport generic_homology(const ChainComplex& c, const GenericOptions& opts = {});

/// Spanning columns of ker(d_degree) for a specialized complex (all of C_0 in degree 0).
struct KernelBasis {
  int degree = 0;
  std::uint64_t prime = 0;
  std::vector<std::vector<std::uint64_t>> columns;
};

KernelBasis kernel_basis(const ModChainComplex& c, int degree);

/// Betti numbers of Sym^k(Sigma_g): monomials of each degree with weight <= k.
std::vector<std::uint64_t> betti_symmetric_power(int genus, int k);
long long euler_characteristic(int genus, int k);
HomologyReport betti_report(int genus, int k);

}  // namespace sympow::homology
