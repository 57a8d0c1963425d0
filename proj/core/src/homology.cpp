#include "sympow/homology.hpp"

#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include <json.hpp>

namespace sympow::homology {

std::string to_string(Method m) {
  switch (m) {
    case Method::integer_snf: return "integer-snf";
    case Method::generic_rank: return "generic-rank";
    case Method::betti_count: return "betti-count";
  }
  return "unknown";
}

std::vector<std::size_t> HomologyReport::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& h : homology) out.push_back(h.rank);
  return out;
}

long long HomologyReport::euler() const {
  long long chi = 0;
  for (const auto& h : homology) chi += (h.degree % 2 == 0 ? 1 : -1) * static_cast<long long>(h.rank);
  return chi;
}

namespace {

nlohmann::ordered_json integer_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace

std::string HomologyReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["case"] = case_tag;
  doc["g"] = g;
  doc["k"] = k;
  doc["N"] = modulus;
  doc["method"] = to_string(method);
  doc["prime"] = prime;
  doc["trials"] = trials;
  doc["seed"] = seed;
  auto list = nlohmann::ordered_json::array();
  for (const auto& h : homology) {
    auto torsion = nlohmann::ordered_json::array();
    for (const auto& t : h.torsion) torsion.push_back(integer_json(t));
    list.push_back(nlohmann::ordered_json{{"degree", h.degree}, {"rank", h.rank}, {"torsion", std::move(torsion)}});
  }
  doc["homology"] = std::move(list);
  doc["euler"] = euler();
  return doc.dump(2) + "\n";
}

std::string HomologyReport::to_csv() const {
  std::string out = "case,g,k,N,method,prime,trials,seed,degree,rank,torsion\n";
  for (const auto& h : homology) {
    std::vector<std::string> torsion;
    for (const auto& t : h.torsion) torsion.push_back(t.get_str());
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", case_tag, g, k, modulus, to_string(method), prime,
                       trials, seed, h.degree, h.rank, fmt::join(torsion, ";"));
  }
  return out;
}

std::string HomologyReport::to_text() const {
  std::string out = fmt::format("case {}  g={} k={} N={}  method {}", case_tag, g, k, modulus, to_string(method));
  if (method == Method::generic_rank) out += fmt::format("  prime {} trials {} seed {}", prime, trials, seed);
  out += "\n";
  out += fmt::format("{:>6}  {:>8}  {}\n", "degree", "rank", "torsion");
  for (const auto& h : homology) {
    std::vector<std::string> torsion;
    for (const auto& t : h.torsion) torsion.push_back("Z/" + t.get_str());
    out += fmt::format("{:>6}  {:>8}  {}\n", h.degree, h.rank, torsion.empty() ? "-" : fmt::format("{}", fmt::join(torsion, " + ")));
  }
  out += fmt::format("euler characteristic {}\n", euler());
  return out;
}

HomologyReport integer_homology(const IntChainComplex& c) {
  const int top = c.top_degree();
  std::vector<SnfResult> snf(static_cast<std::size_t>(top + 2));
  for (int d = 1; d <= top; ++d) {
    const auto& b = c.boundary(d);
    if (b.rows() != c.ranks[static_cast<std::size_t>(d - 1)] || b.cols() != c.ranks[static_cast<std::size_t>(d)]) {
      throw std::invalid_argument("integer complex boundary has the wrong shape");
    }
    if (d >= 2 && !(c.boundary(d - 1) * b).is_zero()) {
      throw std::logic_error(fmt::format("boundary squares to nonzero at degree {}", d));
    }
    snf[static_cast<std::size_t>(d)] = smith_normal_form(b);
  }

  HomologyReport report;
  report.case_tag = complexes::to_string(c.kind);
  report.g = c.shape.rank;
  report.k = c.k;
  report.modulus = c.modulus;
  report.method = Method::integer_snf;
  for (int d = 0; d <= top; ++d) {
    const std::size_t out_rank = d >= 1 ? snf[static_cast<std::size_t>(d)].rank() : 0;
    const std::size_t in_rank = d + 1 <= top ? snf[static_cast<std::size_t>(d + 1)].rank() : 0;
    HomologyEntry entry;
    entry.degree = d;
    entry.rank = c.ranks[static_cast<std::size_t>(d)] - out_rank - in_rank;
    if (d + 1 <= top) entry.torsion = snf[static_cast<std::size_t>(d + 1)].torsion();
    report.homology.push_back(std::move(entry));
  }
  return report;
}

std::size_t generic_rank(const SparseRingMatrix& m, int trials, std::uint64_t seed, std::uint64_t prime,
                         int threads) {
  if (trials < 1) throw std::invalid_argument("generic rank needs at least one trial");
  const auto ranks = run_trials<std::size_t>(trials, threads, [&](int t) {
    const auto s = groupring::UnitSpecialization::random(m.shape(), prime, seed, static_cast<std::uint64_t>(t));
    return m.specialize(s).rank();
  });
  return *std::max_element(ranks.begin(), ranks.end());
}

std::vector<std::size_t> specialized_homology(const ModChainComplex& c) {
  const int top = c.top_degree();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
  for (int d = 1; d <= top; ++d) ranks[static_cast<std::size_t>(d)] = c.boundary(d).rank();
  std::vector<std::size_t> dims;
  for (int d = 0; d <= top; ++d) {
    dims.push_back(c.ranks[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d)] -
                   ranks[static_cast<std::size_t>(d + 1)]);
  }
  return dims;
}

HomologyReport generic_homology(const ChainComplex& c, const GenericOptions& opts) {
  if (opts.trials < 1) throw std::invalid_argument("generic homology needs at least one trial");
  const auto per_trial = run_trials<std::vector<std::size_t>>(opts.trials, opts.threads, [&](int t) {
    const auto s = groupring::UnitSpecialization::random(c.shape(), opts.prime, opts.seed, static_cast<std::uint64_t>(t));
    return specialized_homology(complexes::specialize_complex(c, s));
  });
  std::vector<std::size_t> dims = per_trial.front();
  for (const auto& trial : per_trial) {
    for (std::size_t d = 0; d < dims.size(); ++d) dims[d] = std::min(dims[d], trial[d]);
  }

  HomologyReport report;
  report.case_tag = complexes::to_string(c.kind());
  report.g = c.shape().rank;
  report.k = c.k();
  report.method = Method::generic_rank;
  report.prime = opts.prime;
  report.trials = opts.trials;
  report.seed = opts.seed;
  for (std::size_t d = 0; d < dims.size(); ++d) report.homology.push_back({static_cast<int>(d), dims[d], {}});
  return report;
}

KernelBasis kernel_basis(const ModChainComplex& c, int degree) {
  if (degree < 0 || degree > c.top_degree()) throw std::out_of_range("kernel degree out of range");
  KernelBasis out;
  out.degree = degree;
  out.prime = c.prime;
  if (degree == 0) {
    const auto n = c.ranks[0];
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint64_t> v(n, 0);
      v[i] = 1;
      out.columns.push_back(std::move(v));
    }
    return out;
  }
  out.columns = c.boundary(degree).kernel();
  return out;
}

std::vector<std::uint64_t> betti_symmetric_power(int genus, int k) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  const int gens = 2 * genus;
  std::vector<std::uint64_t> betti;
  // Degree d is spanned by e_J gamma^(s) with |J| + 2s = d and |J| + s <= k.
  for (int j = 0; j <= std::min(gens, k); ++j) {
    const auto count = dga::exterior_masks(gens, j).size();
    for (int s = 0; j + s <= k; ++s) {
      const auto d = static_cast<std::size_t>(j + 2 * s);
      if (betti.size() <= d) betti.resize(d + 1, 0);
      betti[d] += count;
    }
  }
  return betti;
}

long long euler_characteristic(int genus, int k) {
  const auto betti = betti_symmetric_power(genus, k);
  long long chi = 0;
  for (std::size_t d = 0; d < betti.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(betti[d]);
  return chi;
}

HomologyReport betti_report(int genus, int k) {
  const auto betti = betti_symmetric_power(genus, k);
  HomologyReport report;
  report.case_tag = "symmetric-power";
  report.g = genus;
  report.k = k;
  report.method = Method::betti_count;
  for (std::size_t d = 0; d < betti.size(); ++d) {
    report.homology.push_back({static_cast<int>(d), static_cast<std::size_t>(betti[d]), {}});
  }
  return report;
}

}  // namespace sympow::homology
