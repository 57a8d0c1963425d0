// Acceptance run: one PASS/FAIL line per criterion. Optional argv[1] is the
// path of the sympow binary used for the process-level determinism check.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "cli.hpp"
#include "sympow/complexes.hpp"
#include "sympow/homology.hpp"
#include "sympow/verify.hpp"

namespace {

using namespace sympow;
using Ranks = std::vector<std::size_t>;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string first_failure(const verify::Report& r) {
  for (const auto& c : r.checks) {
    if (!c.pass) return c.name + (c.detail.empty() ? "" : " [" + c.detail + "]");
  }
  return "";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return out;
}

// Coefficient of x^k in (1 + t x)^{2g} / ((1 - x)(1 - t^2 x)), graded by t.
std::vector<std::uint64_t> series_betti(int g, int k) {
  std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(k + 1),
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(2 * k + 1), 0));
  s[0][0] = 1;
  for (int f = 0; f < 2 * g; ++f) {
    for (int w = k; w >= 1; --w) {
      for (int d = 2 * k; d >= 1; --d) s[w][d] += s[w - 1][d - 1];
    }
  }
  for (int w = 1; w <= k; ++w) {
    for (int d = 0; d <= 2 * k; ++d) s[w][d] += s[w - 1][d];
  }
  for (int w = 1; w <= k; ++w) {
    for (int d = 2; d <= 2 * k; ++d) s[w][d] += s[w - 1][d - 2];
  }
  auto out = s[static_cast<std::size_t>(k)];
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

verify::Options verify_options(std::uint64_t seed = 1) {
  verify::Options o;
  o.trials = 5;
  o.seed = seed;
  o.prime = homology::kVerifyPrime;
  return o;
}

Outcome dga_soundness() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (int g = 1; g <= 3; ++g) {
    const auto r = verify::verify_dga_suite(g, 6, 1);
    o.require(r.passed(), first_failure(r));
  }
  const auto t = seconds_since(start);
  o.require(t < 10.0, fmt::format("took {:.1f}s", t));
  if (o.pass) o.detail = fmt::format("g = 1..3, weight <= 6, 100 random elements, {:.2f}s", t);
  return o;
}

Outcome betti_oracle() {
  Outcome o;
  for (int g = 1; g <= 4; ++g) {
    for (int k = 0; k <= 6; ++k) {
      const auto betti = homology::betti_symmetric_power(g, k);
      o.require(betti == series_betti(g, k), fmt::format("count differs from series at g={} k={}", g, k));
      const auto h = homology::integer_homology(complexes::base_change(complexes::build_cover_complex(g, k), 1));
      bool same = h.homology.size() == betti.size();
      for (std::size_t d = 0; same && d < betti.size(); ++d) {
        same = h.homology[d].rank == betti[d] && h.homology[d].torsion.empty();
      }
      o.require(same, fmt::format("N=1 integer homology differs at g={} k={}", g, k));
    }
  }
  if (o.pass) o.detail = "g <= 4, k <= 6, counts = series = N=1 SNF, no torsion";
  return o;
}

Outcome euler() {
  Outcome o;
  for (int g = 1; g <= 4; ++g) {
    for (int k = 0; k <= 2 * g - 2; ++k) {
      const long long expected = (k % 2 ? -1 : 1) * static_cast<long long>(binomial(2 * g - 2, k));
      o.require(homology::euler_characteristic(g, k) == expected, fmt::format("g={} k={}", g, k));
    }
  }
  const auto cover = complexes::build_cover_complex(2, 2);
  const auto chi1 = homology::integer_homology(complexes::base_change(cover, 1)).euler();
  const auto chi2 = homology::integer_homology(complexes::base_change(cover, 2)).euler();
  o.require(chi1 == 1 && chi2 == 16, fmt::format("chi(N=2) = {}, chi(N=1) = {}", chi2, chi1));
  if (o.pass) o.detail = fmt::format("k <= 2g-2, g <= 4; chi(N=2) = {} = 2^4 * {}", chi2, chi1);
  return o;
}

Outcome lemma_torus() {
  Outcome o;
  std::size_t runs = 0;
  for (std::uint64_t seed : {1, 2, 3}) {
    for (int n = 2; n <= 6; ++n) {
      for (int k = 2; k <= n; ++k) {
        const auto r = verify::verify_lemma_torus(n, k, verify_options(seed));
        o.require(r.passed(), first_failure(r));
        ++runs;
      }
    }
  }
  if (o.pass) o.detail = fmt::format("{} (n, k, seed) runs, 5 trials at p = 2147483647", runs);
  return o;
}

Outcome lemma_q() {
  Outcome o;
  for (int g = 1; g <= 3; ++g) {
    for (int k = 1; k <= 2 * g; ++k) {
      const auto r = verify::verify_lemma_q(g, k, verify_options());
      o.require(r.passed(), first_failure(r));
    }
  }
  if (o.pass) o.detail = "g <= 3, 1 <= k <= 2g";
  return o;
}

Outcome lemma_cohomology() {
  Outcome o;
  for (int g = 2; g <= 3; ++g) {
    const auto r = verify::verify_lemma_cohomology(g, verify_options());
    for (const auto& c : r.checks) o.require(c.pass, c.name + (c.detail.empty() ? "" : " [" + c.detail + "]"));
  }
  for (int g = 1; g <= 4; ++g) {
    const auto shape = groupring::RingShape::surface(g);
    for (int m = 1; m <= g; ++m) {
      const auto previous = m == 1 ? dga::Element::one(shape) : dga::sigma_element(g, m - 1);
      const bool ok = dga::boundary(dga::sigma_element(g, m)) == -dga::multiply(dga::lambda_element(g), previous);
      o.require(ok, fmt::format("d(sigma_{}) at g={}", m, g));
    }
  }
  return o;
}

Outcome theorem_main() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  homology::GenericOptions opts{5, 1, homology::kVerifyPrime, 0};
  const auto dims22 = homology::generic_homology(complexes::build_cover_complex(2, 2), opts).ranks();
  o.require(dims22 == Ranks{0, 0, 1, 0, 0}, "cover(2,2) generic dims differ");
  for (auto [g, k] : std::vector<std::pair<int, int>>{{1, 2}, {2, 4}, {2, 5}}) {
    const auto dims = homology::generic_homology(complexes::build_cover_complex(g, k), opts).ranks();
    o.require(std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; }),
              fmt::format("cover({},{}) generic dims not zero", g, k));
  }
  for (auto [g, k] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 4}, {2, 5}}) {
    const auto r = verify::verify_theorem_main(g, k, verify_options(), {1, 2});
    o.require(r.passed(), first_failure(r));
  }
  const auto t = seconds_since(start);
  o.require(t < 60.0, fmt::format("took {:.1f}s", t));
  if (o.pass) o.detail = fmt::format("(2,2) -> (0,0,1,0,0); (1,2), (2,4), (2,5) -> 0; {:.2f}s", t);
  return o;
}

Outcome non_finite_generation() {
  Outcome o;
  std::size_t witnesses = 0;
  for (auto [g, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}, {3, 4}}) {
    for (const auto& w : verify::admissible_witnesses(g, k)) {
      const auto r = verify::verify_nonfg_witness(g, k, w);
      o.require(r.passed(), first_failure(r));
      ++witnesses;
    }
  }
  const auto h = homology::integer_homology(complexes::base_change(complexes::build_cover_complex(2, 2), 2));
  const auto rank2 = h.homology[2].rank;
  o.require(rank2 > 7, fmt::format("rank H_2 at N=2 is {}", rank2));
  o.require(rank2 == 22, fmt::format("rank H_2 at N=2 moved from the pinned 22 to {}", rank2));
  if (o.pass) o.detail = fmt::format("{} witnesses; rank H_2(N=2) = {} > 7", witnesses, rank2);
  return o;
}

Outcome mutation_sensitivity() {
  Outcome o;
  const auto baseline = verify::verify_dga_suite(2, 3, 7);
  o.require(baseline.passed(), "unmutated dga suite fails");
  dga::Conventions flip;
  flip.negate_f1_boundary = true;
  dga::Conventions unit;
  unit.unit_divided_powers = true;
  for (const auto& [name, conv] : std::vector<std::pair<std::string, dga::Conventions>>{{"sign of d(f1)", flip},
                                                                                         {"unit divided powers", unit}}) {
    // The dga suite alone must notice; lemma-cohomology is not counted here.
    bool failed = false;
    for (int g = 1; g <= 3; ++g) failed = failed || !verify::verify_dga_suite(g, 6, 1, conv).passed();
    o.require(failed, name + " mutant passes the dga suite");
  }
  if (o.pass) o.detail = "dga suite fails for both mutants";
  return o;
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return out + fmt::format("<status {}>", status);
}

Outcome determinism(const std::string& binary) {
  Outcome o;
  const std::vector<std::string> commands = {
      "betti --genus 2 --k 2",
      "cover-homology --genus 2 --k 2 --method generic --trials 5 --seed 1",
      "cover-homology --genus 2 --k 3 --method snf --N 2 --format csv",
      "quotient-homology --genus 2 --k 3 --seed 5 --format text",
      "wedge-homology --arity 5 --k 3 --seed 9",
      "verify --suite lemma-torus --seed 2",
      "verify --suite theorem-main --genus 2 --k 2 --seed 7",
      "export --genus 2 --k 2 --case cover --format json",
  };
  for (const auto& args : commands) {
    std::string reference;
    for (const char* threads : {"", " --threads 1", " --threads 4", " --threads 1"}) {
      std::string out;
      if (binary.empty()) {
        std::vector<std::string> argv{"sympow"};
        std::istringstream words(args + threads);
        for (std::string w; words >> w;) argv.push_back(w);
        std::ostringstream os;
        std::ostringstream es;
        out = std::to_string(cli::run(argv, os, es)) + os.str();
      } else {
        out = capture(binary + " " + args + threads + " 2>/dev/null");
      }
      if (reference.empty()) {
        reference = out;
      } else {
        o.require(out == reference, fmt::format("'{}{}' differs", args, threads));
      }
    }
  }
  if (o.pass) {
    o.detail = fmt::format("{} commands x 4 runs (threads default/1/4/1), {}", commands.size(),
                           binary.empty() ? "in process" : "separate processes");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"DGA soundness", dga_soundness},
      {"Betti numbers match the generating function", betti_oracle},
      {"Euler characteristic", euler},
      {"wedge complex: generic homology only in degree k", lemma_torus},
      {"truncated lambda complex: cohomology in the top position", lemma_q},
      {"lambda complex classes lambda sigma_m", lemma_cohomology},
      {"universal cover: generic homology", theorem_main},
      {"non-finite generation witness", non_finite_generation},
      {"mutation sensitivity", mutation_sensitivity},
      {"determinism across runs and threads", [&] { return determinism(binary); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += o.pass ? 0 : 1;
    std::cout << fmt::format("criterion {:>2}: {}  {}: {}", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                             o.detail)
              << std::endl;
  }
  std::cout << fmt::format("{} of {} criteria pass", criteria.size() - static_cast<std::size_t>(failures), criteria.size())
            << std::endl;
  return failures == 0 ? 0 : 1;
}
