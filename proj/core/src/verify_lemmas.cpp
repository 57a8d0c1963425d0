#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "sympow/verify.hpp"

namespace sympow::verify {

namespace {

using complexes::BasedFreeModule;
using complexes::ChainComplex;
using dga::Element;
using dga::Monomial;
using groupring::GroupRingElement;
using groupring::RingShape;
using groupring::UnitSpecialization;
using homology::KernelBasis;
using Vec = std::vector<std::uint64_t>;

std::uint64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return out;
}

std::string join(const std::vector<std::size_t>& v) { return fmt::format("({})", fmt::join(v, ", ")); }

/// Coordinates of `a` in the module basis, each coefficient evaluated at `s`.
Vec specialize_vector(const Element& a, const BasedFreeModule& module, const UnitSpecialization& s) {
  Vec out(module.rank(), 0);
  for (const auto& [m, c] : a.terms()) {
    const auto idx = module.index_of(m);
    if (!idx) throw std::logic_error("element has a monomial outside the module basis");
    out[*idx] = groupring::specialize(c, s);
  }
  return out;
}

std::size_t column_rank(const std::vector<Vec>& columns, std::size_t rows, std::uint64_t prime) {
  if (columns.empty() || rows == 0) return 0;
  return ModMatrix::from_columns(columns, rows, prime).rank();
}

/// One specialization of the Koszul data for genus g: the wedge complex
/// C_*(X_2g) with its cycle modules K_i, and the lambda maps L_i: C_i -> C_{i+1}.
class KoszulSample {
 public:
  KoszulSample(const ChainComplex& wedge, const ChainComplex& lambda, const UnitSpecialization& s)
      : genus_(lambda.shape().rank), prime_(s.prime) {
    const UnitSpecialization wedge_s{s.prime, s.values};
    wedge_ = complexes::specialize_complex(wedge, wedge_s);
    lambda_ = complexes::specialize_complex(lambda, s);
    for (int i = 0; i <= 2 * genus_; ++i) cycles_.push_back(homology::kernel_basis(wedge_, i).columns);
  }

  std::uint64_t prime() const { return prime_; }
  std::size_t rank(int position) const { return lambda_.ranks[static_cast<std::size_t>(2 * genus_ - position)]; }
  const std::vector<Vec>& cycles(int position) const { return cycles_[static_cast<std::size_t>(position)]; }

  /// L_i as a matrix from position i to position i + 1.
  const ModMatrix& lambda_map(int position) const { return lambda_.boundary(2 * genus_ - position); }

  std::vector<Vec> lambda_image_of_cycles(int position) const {
    std::vector<Vec> out;
    for (const auto& v : cycles(position)) out.push_back(lambda_map(position).apply(v));
    return out;
  }

  std::size_t lambda_rank_on_cycles(int position) const {
    if (position < 0 || position >= 2 * genus_) return 0;
    return column_rank(lambda_image_of_cycles(position), rank(position + 1), prime_);
  }

  /// Cohomology of (K_*, lambda) at the given position.
  std::size_t cycle_cohomology(int position) const {
    return cycles(position).size() - lambda_rank_on_cycles(position) - lambda_rank_on_cycles(position - 1);
  }

 private:
  int genus_;
  std::uint64_t prime_;
  complexes::ModChainComplex wedge_;
  complexes::ModChainComplex lambda_;
  std::vector<std::vector<Vec>> cycles_;
};

template <typename T>
std::vector<T> per_trial(const Options& opts, const std::function<T(int)>& fn) {
  if (opts.trials < 1) throw std::invalid_argument("at least one trial is required");
  return homology::run_trials<T>(opts.trials, opts.threads, fn);
}

UnitSpecialization trial_specialization(const RingShape& shape, const Options& opts, int t) {
  return UnitSpecialization::random(shape, opts.prime, opts.seed, static_cast<std::uint64_t>(t));
}

std::vector<std::size_t> poincare_cp_bundle(int genus, int k) {
  // (1 + t)^{2g} (1 + t^2 + ... + t^{2(k-g)})
  std::vector<std::size_t> out(static_cast<std::size_t>(2 * k + 1), 0);
  for (int j = 0; j <= 2 * genus; ++j) {
    for (int s = 0; s <= k - genus; ++s) out[static_cast<std::size_t>(j + 2 * s)] += binomial(2 * genus, j);
  }
  return out;
}

}  // namespace

Report verify_lemma_torus(int arity, int k, const Options& opts, const dga::Conventions& conv) {
  if (k < 2 || k > arity) throw std::invalid_argument("lemma-torus needs 2 <= k <= n");
  Report report;
  report.suite = "lemma-torus";
  const auto tag = fmt::format("n={} k={} seed={}", arity, k, opts.seed);
  const auto c = complexes::build_wedge_complex(arity, k, conv);
  const auto h = homology::generic_homology(c, opts.generic());
  const auto dims = h.ranks();

  std::vector<std::size_t> low(dims.begin(), dims.begin() + k);
  const bool vanish = std::all_of(low.begin(), low.end(), [](std::size_t d) { return d == 0; });
  report.add(fmt::format("generic H_i = 0 for 0 <= i < k ({})", tag), vanish, fmt::format("dims {}", join(dims)));

  const auto expected = binomial(arity - 1, k);
  report.add(fmt::format("dim K_k = binomial(n-1, k) = {} ({})", expected, tag), dims.back() == expected,
             fmt::format("generic dim {}", dims.back()));

  if (k < arity) {
    // d(e1 ... e_{k+1}) is a nonzero cycle of degree k.
    const auto shape = RingShape::wedge(arity);
    const Element top = Element::monomial(shape, Monomial{(1u << (k + 1)) - 1u, 0});
    const auto cycle = dga::boundary(top, conv);
    const bool ok = !cycle.is_zero() && dga::boundary(cycle, conv).is_zero();
    report.add(fmt::format("d(e1...e{}) is a nonzero cycle in K_{} ({})", k + 1, k, tag), ok,
               ok ? "" : cycle.to_string());
  }
  return report;
}

Report verify_lemma_q(int genus, int k, const Options& opts) {
  if (genus < 1 || k < 1) throw std::invalid_argument("lemma-q needs g >= 1 and k >= 1");
  Report report;
  report.suite = "lemma-q";
  const auto tag = fmt::format("g={} k={} seed={}", genus, k, opts.seed);
  const auto q = complexes::build_Q_complex(genus, k);
  const int last = std::min(k, 2 * genus);

  std::vector<std::size_t> by_position;
  const auto dims = homology::generic_homology(q, opts.generic()).ranks();
  for (int i = 0; i <= last; ++i) by_position.push_back(dims[static_cast<std::size_t>(q.degree_of_position(i))]);

  bool below_top = true;
  for (int i = 0; i < last; ++i) below_top = below_top && by_position[static_cast<std::size_t>(i)] == 0;
  report.add(fmt::format("generic cohomology vanishes below the top position ({})", tag), below_top,
             fmt::format("dims by position {}", join(by_position)));

  const auto expected = k < 2 * genus ? binomial(2 * genus - 1, k) : 0;
  report.add(fmt::format("top position {} has dimension {} ({})", last, expected, tag),
             by_position.back() == expected, fmt::format("generic dim {}", by_position.back()));

  bool composite_zero = true;
  for (int d = 2; d <= q.top_degree(); ++d) {
    composite_zero = composite_zero && (q.boundary_matrix(d - 1) * q.boundary_matrix(d)).is_zero();
  }
  report.add(fmt::format("consecutive lambda maps compose to 0 ({})", tag), composite_zero, "");
  return report;
}

Report verify_lemma_cohomology(int genus, const Options& opts, const dga::Conventions& conv) {
  if (genus < 2) throw std::invalid_argument("lemma-cohomology needs g >= 2");
  Report report;
  report.suite = "lemma-cohomology";
  const int top = 2 * genus;
  const auto tag = fmt::format("g={} seed={}", genus, opts.seed);
  const auto shape = RingShape::surface(genus);
  const auto lambda_complex = complexes::build_lambda_complex(genus);
  const auto wedge = complexes::build_wedge_complex(top, top, conv);

  std::vector<std::size_t> expected(static_cast<std::size_t>(top + 1), 0);
  for (int m = 1; 2 * m + 1 <= top - 1; ++m) expected[static_cast<std::size_t>(2 * m + 1)] = 1;
  expected[static_cast<std::size_t>(top)] = 1;

  // Full lambda complex C_0 -> ... -> C_2g.
  {
    const auto dims = homology::generic_homology(lambda_complex, opts.generic()).ranks();
    std::vector<std::size_t> by_position;
    for (int i = 0; i <= top; ++i) by_position.push_back(dims[static_cast<std::size_t>(lambda_complex.degree_of_position(i))]);
    report.add(fmt::format("generic cohomology of the lambda complex on C_* is {} ({})", join(expected), tag),
               by_position == expected, fmt::format("dims by position {}", join(by_position)));
  }

  const auto samples = per_trial<std::shared_ptr<KoszulSample>>(opts, [&](int t) {
    return std::make_shared<KoszulSample>(wedge, lambda_complex, trial_specialization(shape, opts, t));
  });

  // Lambda complex restricted to the cycle modules K_*.
  {
    std::vector<std::size_t> dims(static_cast<std::size_t>(top + 1), SIZE_MAX);
    for (const auto& s : samples) {
      for (int i = 0; i <= top; ++i) dims[static_cast<std::size_t>(i)] = std::min(dims[static_cast<std::size_t>(i)], s->cycle_cohomology(i));
    }
    report.add(fmt::format("generic cohomology of the lambda complex on K_* is {} ({})", join(expected), tag),
               dims == expected, fmt::format("dims by position {}", join(dims)));
  }

  for (int m = 1; 2 * m + 1 <= top - 1; ++m) {
    const int position = 2 * m + 1;
    const auto lambda_sigma = dga::multiply(dga::lambda_element(genus), dga::sigma_element(genus, m), conv);
    const auto& module = lambda_complex.module(lambda_complex.degree_of_position(position));

    bool cycle = dga::boundary(lambda_sigma, conv).is_zero();
    bool annihilated = true;
    std::size_t best_increase = 0;
    std::string increase_detail;
    for (int t = 0; t < static_cast<int>(samples.size()); ++t) {
      const auto& s = *samples[static_cast<std::size_t>(t)];
      const auto v = specialize_vector(lambda_sigma, module, trial_specialization(shape, opts, t));
      const auto next = s.lambda_map(position).apply(v);
      annihilated = annihilated && std::all_of(next.begin(), next.end(), [](std::uint64_t x) { return x == 0; });

      auto image = s.lambda_image_of_cycles(position - 1);
      const auto before = column_rank(image, module.rank(), s.prime());
      image.push_back(v);
      const auto after = column_rank(image, module.rank(), s.prime());
      if (after - before > best_increase || increase_detail.empty()) {
        best_increase = std::max(best_increase, after - before);
        increase_detail = fmt::format("rank of lambda K_{} is {}, with lambda sigma_{} appended {}", position - 1,
                                      before, m, after);
      }
    }
    report.add(fmt::format("lambda sigma_{} is a cycle and lambda (lambda sigma_{}) = 0 at position {} ({})", m, m,
                           position, tag),
               cycle && annihilated, "");
    report.add(fmt::format("lambda sigma_{} is not in lambda K_{}: rank increases by 1 ({})", m, position - 1, tag),
               best_increase == 1, increase_detail);
  }

  // d(sigma_m) = -lambda sigma_{m-1}, sigma_0 = 1.
  {
    std::string failure;
    const auto lambda = dga::lambda_element(genus);
    for (int m = 1; m <= genus; ++m) {
      const auto previous = m == 1 ? Element::one(shape) : dga::sigma_element(genus, m - 1);
      const auto lhs = dga::boundary(dga::sigma_element(genus, m), conv);
      const auto rhs = -dga::multiply(lambda, previous, conv);
      if (failure.empty() && !(lhs == rhs)) {
        failure = fmt::format("m={}: d(sigma) = {} but -lambda sigma = {}", m, lhs.to_string(), rhs.to_string());
      }
    }
    report.add(fmt::format("d(sigma_m) = -lambda sigma_(m-1) for 1 <= m <= {}", genus), failure.empty(), failure);
  }

  // Zig-zag sigma_g -> sigma_(g-1) -> ... -> sigma_0 = 1 ends at a unit of augmentation 1.
  {
    bool ok = true;
    Element current = dga::sigma_element(genus, genus);
    for (int m = genus; m >= 1; --m) {
      const auto previous = m == 1 ? Element::one(shape) : dga::sigma_element(genus, m - 1);
      ok = ok && dga::boundary(current, conv) == -dga::multiply(dga::lambda_element(genus), previous, conv);
      current = previous;
    }
    const auto unit = current.coefficient(Monomial{0, 0});
    ok = ok && current.terms().size() == 1 && groupring::augmentation(unit) == 1;
    report.add(fmt::format("zig-zag from lambda sigma_m reaches 1 with augmentation 1 (g={})", genus), ok, "");
  }
  return report;
}

Report verify_theorem_main(int genus, int k, const Options& opts, const std::vector<int>& moduli,
                           const dga::Conventions& conv) {
  if (genus < 1 || k < 2) throw std::invalid_argument("theorem-main needs g >= 1 and k >= 2");
  Report report;
  report.suite = "theorem-main";
  const auto tag = fmt::format("g={} k={} seed={}", genus, k, opts.seed);
  const auto shape = RingShape::surface(genus);
  const auto cover = complexes::build_cover_complex(genus, k, conv);
  const auto dims = homology::generic_homology(cover, opts.generic()).ranks();

  if (k <= 2 * genus) {
    const auto lambda_complex = complexes::build_lambda_complex(genus);
    const auto wedge = complexes::build_wedge_complex(2 * genus, 2 * genus, conv);
    const auto expected_k = per_trial<std::size_t>(opts, [&](int t) {
      const KoszulSample s(wedge, lambda_complex, trial_specialization(shape, opts, t));
      return s.cycles(k).size() - s.lambda_rank_on_cycles(k - 1);
    });
    const auto expected = *std::min_element(expected_k.begin(), expected_k.end());
    bool others = true;
    for (std::size_t d = 0; d < dims.size(); ++d) {
      if (static_cast<int>(d) != k) others = others && dims[d] == 0;
    }
    report.add(fmt::format("generic homology vanishes outside degree k ({})", tag), others,
               fmt::format("dims {}", join(dims)));
    report.add(fmt::format("generic dim H_k = dim K_k - dim lambda K_(k-1) = {} ({})", expected, tag),
               dims[static_cast<std::size_t>(k)] == expected,
               fmt::format("generic dim {}", dims[static_cast<std::size_t>(k)]));
  } else {
    const bool zero = std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
    report.add(fmt::format("generic homology vanishes for k > 2g ({})", tag), zero, fmt::format("dims {}", join(dims)));
  }

  std::vector<int> covers = moduli;
  if (std::find(covers.begin(), covers.end(), 1) == covers.end()) covers.insert(covers.begin(), 1);
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  if (covers.front() < 1) throw std::invalid_argument("cover moduli must be >= 1");

  std::optional<homology::HomologyReport> base;
  for (int n : covers) {
    const auto h = homology::integer_homology(complexes::base_change(cover, n));
    if (n == 1) {
      base = h;
      continue;
    }
    long long scale = 1;
    for (int i = 0; i < 2 * genus; ++i) scale *= n;
    const auto chi = h.euler();
    report.add(fmt::format("Euler characteristic scales: chi(N={}) = {}^{} chi(1) ({})", n, n, 2 * genus, tag),
               chi == scale * base->euler(), fmt::format("chi(N={}) = {}, chi(1) = {}", n, chi, base->euler()));
    if (2 <= k && k <= 2 * genus - 2) {
      const auto rank_n = h.homology[static_cast<std::size_t>(k)].rank;
      const auto rank_1 = base->homology[static_cast<std::size_t>(k)].rank;
      report.add(fmt::format("free rank of H_k grows on the N={} cover ({})", n, tag), rank_n > rank_1,
                 fmt::format("rank H_{} = {} at N={}, {} at N=1", k, rank_n, n, rank_1));
    }
  }
  return report;
}

std::vector<WitnessChoice> admissible_witnesses(int genus, int k) {
  if (k < 2 || k > 2 * genus - 2) throw std::invalid_argument("witnesses need 2 <= k <= 2g - 2");
  const int others = genus - 1;  // indices 2..g
  std::vector<WitnessChoice> out;
  for (int m = 0; m <= std::min(k, others); ++m) {
    const int n = k - m;
    if (n > others) continue;
    for (auto emask : dga::exterior_masks(others, m)) {
      for (auto fmask : dga::exterior_masks(others, n)) {
        WitnessChoice w;
        for (int i = 0; i < others; ++i) {
          if (emask & (1u << i)) w.e_indices.push_back(i + 2);
          if (fmask & (1u << i)) w.f_indices.push_back(i + 2);
        }
        out.push_back(std::move(w));
      }
    }
  }
  return out;
}

Element evaluate_F(const Element& a) {
  const auto& shape = a.shape();
  if (shape.family != groupring::Family::surface) throw std::invalid_argument("F is defined on the surface algebra");
  Element out(shape);
  for (const auto& [m, c] : a.terms()) {
    mpz_class value = 0;
    for (const auto& [exps, coeff] : c.terms()) {
      if (exps[0] < 0) throw std::domain_error("F is undefined on negative powers of x1");
      if (exps[0] == 0) value += coeff;
    }
    if (value != 0) out.add_term(m, GroupRingElement::constant(shape, value));
  }
  return out;
}

Report verify_nonfg_witness(int genus, int k, const WitnessChoice& choice) {
  if (k < 2 || k > 2 * genus - 2) throw std::invalid_argument("nonfg needs 2 <= k <= 2g - 2");
  if (static_cast<int>(choice.e_indices.size() + choice.f_indices.size()) != k) {
    throw std::invalid_argument("witness needs m + n = k indices");
  }
  auto check_indices = [&](const std::vector<int>& idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] < 2 || idx[i] > genus) throw std::invalid_argument("witness indices must lie in 2..g");
      if (i > 0 && idx[i] <= idx[i - 1]) throw std::invalid_argument("witness indices must be strictly increasing");
    }
  };
  check_indices(choice.e_indices);
  check_indices(choice.f_indices);

  const auto shape = RingShape::surface(genus);
  Element tail = Element::one(shape);
  for (int i : choice.e_indices) tail = dga::multiply(tail, dga::e_generator(shape, i));
  for (int j : choice.f_indices) tail = dga::multiply(tail, dga::f_generator(genus, j));
  const auto a = dga::multiply(dga::e_generator(shape, 1), tail);
  const auto da = dga::boundary(a);
  const auto product = dga::multiply(dga::lambda_element(genus), da);
  const auto value = evaluate_F(product);
  const auto expected = -dga::multiply(dga::f_generator(genus, 1), tail);

  Report report;
  report.suite = "nonfg";
  const auto tag = fmt::format("g={} k={} a={}", genus, k, a.to_string());
  report.add(fmt::format("d(a) is a cycle ({})", tag), dga::boundary(da).is_zero(), "");
  report.add(fmt::format("F(lambda d(a)) = -f1 * e_I * f_J ({})", tag), value == expected,
             fmt::format("F = {}, expected {}", value.to_string(), expected.to_string()));
  report.add(fmt::format("F(lambda d(a)) is nonzero ({})", tag), !value.is_zero(), "");
  return report;
}

Report verify_mattuck(int genus, int k, const Options& opts, const std::vector<int>& moduli) {
  if (genus < 1 || k < 2 * genus) throw std::invalid_argument("mattuck needs k >= 2g");
  Report report;
  report.suite = "mattuck";
  const auto tag = fmt::format("g={} k={} seed={}", genus, k, opts.seed);
  const auto cover = complexes::build_cover_complex(genus, k);
  const auto dims = homology::generic_homology(cover, opts.generic()).ranks();
  report.add(fmt::format("generic homology of the universal cover vanishes ({})", tag),
             std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; }),
             fmt::format("dims {}", join(dims)));

  const auto expected = poincare_cp_bundle(genus, k);
  std::vector<std::size_t> betti;
  for (auto b : homology::betti_symmetric_power(genus, k)) betti.push_back(static_cast<std::size_t>(b));
  report.add(fmt::format("Betti numbers are those of a CP^{} bundle over T^{} ({})", k - genus, 2 * genus, tag),
             betti == expected, fmt::format("betti {}, expected {}", join(betti), join(expected)));

  std::vector<int> covers = moduli;
  if (covers.empty()) covers = {1, 2};
  for (int n : covers) {
    const auto h = homology::integer_homology(complexes::base_change(cover, n));
    const bool torsion_free = std::all_of(h.homology.begin(), h.homology.end(),
                                          [](const homology::HomologyEntry& e) { return e.torsion.empty(); });
    report.add(fmt::format("N={} cover has the same torsion-free homology ({})", n, tag),
               torsion_free && h.ranks() == expected, fmt::format("ranks {}", join(h.ranks())));
  }
  return report;
}

}  // namespace sympow::verify
