#include <map>
#include <random>

#include <fmt/format.h>

#include "sympow/verify.hpp"

namespace sympow::verify {

namespace {

using dga::Element;
using dga::Monomial;
using groupring::GroupRingElement;
using groupring::RingShape;

std::vector<Monomial> monomials_up_to_weight(int genus, int max_weight) {
  std::vector<Monomial> out;
  const int gens = 2 * genus;
  for (int j = 0; j <= std::min(gens, max_weight); ++j) {
    for (auto mask : dga::exterior_masks(gens, j)) {
      for (int s = 0; j + s <= max_weight; ++s) out.push_back(Monomial{mask, s});
    }
  }
  return out;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  GroupRingElement coefficient(const RingShape& shape) {
    GroupRingElement out(shape);
    const auto terms = uniform(1, 3);
    for (std::int64_t t = 0; t < terms; ++t) {
      groupring::ExponentVector exps(static_cast<std::size_t>(shape.variables()), 0);
      for (auto& e : exps) e = static_cast<std::int32_t>(uniform(0, 3) == 0 ? uniform(-2, 2) : 0);
      auto c = uniform(-3, 3);
      if (c == 0) c = 1;
      out.add_term(exps, c);
    }
    return out;
  }

  Element homogeneous(const RingShape& shape, const std::vector<Monomial>& pool) {
    Element out(shape);
    const auto terms = uniform(1, 3);
    for (std::int64_t t = 0; t < terms; ++t) {
      out.add_term(pool[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(pool.size()) - 1))],
                   coefficient(shape));
    }
    return out;
  }

 private:
  std::mt19937_64 gen_;
};

int sign_power(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

Report verify_dga_suite(int genus, int k, std::uint64_t seed, const dga::Conventions& conv) {
  if (genus < 1) throw std::invalid_argument("dga suite needs genus >= 1");
  if (k < 0) throw std::invalid_argument("dga suite needs k >= 0");
  Report report;
  report.suite = "dga";
  const auto shape = RingShape::surface(genus);
  const auto tag = fmt::format("g={} weight<={}", genus, k);
  const auto monomials = monomials_up_to_weight(genus, k);

  auto describe = [&](const Monomial& m) { return dga::to_string(m, shape); };

  // d^2 = 0 and the weight filtration on every basis monomial. d(e_i) = 1 - v_i
  // drops the weight by one, d(gamma^(s)) keeps it, so d never raises weight.
  {
    std::string square_failure;
    std::string weight_failure;
    for (const auto& m : monomials) {
      const auto d = dga::boundary(Element::monomial(shape, m), conv);
      for (const auto& [dm, c] : d.terms()) {
        if (weight_failure.empty() && (dm.weight() > m.weight() || dm.weight() < m.weight() - 1 || dm.degree() != m.degree() - 1)) {
          weight_failure = fmt::format("d({}) contains {}", describe(m), describe(dm));
        }
      }
      const auto dd = dga::boundary(d, conv);
      if (square_failure.empty() && !dd.is_zero()) {
        square_failure = fmt::format("d(d({})) = {}", describe(m), dd.to_string());
      }
    }
    report.add(fmt::format("d^2 = 0 on all {} monomials ({})", monomials.size(), tag), square_failure.empty(),
               square_failure);
    report.add(fmt::format("d keeps the weight filtration (w or w-1) and lowers degree by 1 ({})", tag), weight_failure.empty(),
               weight_failure);
  }

  // Leibniz and graded commutativity on monomial pairs whose product stays in range.
  {
    std::string leibniz_failure;
    std::string commute_failure;
    std::size_t pairs = 0;
    for (const auto& ma : monomials) {
      const auto a = Element::monomial(shape, ma);
      const auto da = dga::boundary(a, conv);
      for (const auto& mb : monomials) {
        if (ma.weight() + mb.weight() > k) continue;
        ++pairs;
        const auto b = Element::monomial(shape, mb);
        const auto ab = dga::multiply(a, b, conv);
        if (leibniz_failure.empty()) {
          auto rhs = dga::multiply(da, b, conv);
          const auto right = dga::multiply(a, dga::boundary(b, conv), conv);
          rhs += sign_power(ma.degree()) == 1 ? right : -right;
          const auto lhs = dga::boundary(ab, conv);
          if (!(lhs == rhs)) {
            leibniz_failure = fmt::format("a = {}, b = {}: d(ab) = {} but d(a)b +- a d(b) = {}", describe(ma),
                                          describe(mb), lhs.to_string(), rhs.to_string());
          }
        }
        if (commute_failure.empty()) {
          auto ba = dga::multiply(b, a, conv);
          if (sign_power(ma.degree() * mb.degree()) == -1) ba = -ba;
          if (!(ab == ba)) {
            commute_failure = fmt::format("a = {}, b = {}: ab = {} but +-ba = {}", describe(ma), describe(mb),
                                          ab.to_string(), ba.to_string());
          }
        }
      }
    }
    report.add(fmt::format("graded Leibniz on {} monomial pairs ({})", pairs, tag), leibniz_failure.empty(),
               leibniz_failure);
    report.add(fmt::format("graded commutativity on {} monomial pairs ({})", pairs, tag), commute_failure.empty(),
               commute_failure);
  }

  // (gamma^(1))^j = j! gamma^(j).
  {
    std::string failure;
    Element power = Element::one(shape);
    mpz_class factorial = 1;
    for (int j = 1; j <= k; ++j) {
      power = dga::multiply(power, dga::gamma_power(genus, 1), conv);
      factorial *= j;
      const auto expected = Element::term(Monomial{0, j}, GroupRingElement::constant(shape, factorial));
      if (failure.empty() && !(power == expected)) {
        failure = fmt::format("(g^(1))^{} = {} but expected {}", j, power.to_string(), expected.to_string());
      }
    }
    report.add(fmt::format("divided powers (g^(1))^j = j! g^(j) for j <= {}", k), failure.empty(), failure);
  }

  {
    const auto lambda = dga::lambda_element(genus);
    const auto square = dga::multiply(lambda, lambda, conv);
    report.add(fmt::format("lambda * lambda = 0 (g={})", genus), square.is_zero(),
               square.is_zero() ? "" : square.to_string());
    const auto d_lambda = dga::boundary(lambda, conv);
    report.add(fmt::format("d(lambda) = 0 (g={})", genus), d_lambda.is_zero(),
               d_lambda.is_zero() ? "" : d_lambda.to_string());
  }

  // 100 seeded random homogeneous elements.
  {
    std::map<int, std::vector<Monomial>> by_degree;
    for (const auto& m : monomials) {
      by_degree[m.degree()].push_back(m);
    }
    std::vector<int> degrees;
    for (const auto& [d, pool] : by_degree) degrees.push_back(d);

    Sampler sampler(seed);
    std::string square_failure;
    std::string leibniz_failure;
    std::string commute_failure;
    constexpr int kSamples = 100;
    for (int t = 0; t < kSamples; ++t) {
      const int deg_a = degrees[static_cast<std::size_t>(sampler.uniform(0, static_cast<std::int64_t>(degrees.size()) - 1))];
      const int deg_b = degrees[static_cast<std::size_t>(sampler.uniform(0, static_cast<std::int64_t>(degrees.size()) - 1))];
      const auto a = sampler.homogeneous(shape, by_degree[deg_a]);
      const auto b = sampler.homogeneous(shape, by_degree[deg_b]);
      const auto da = dga::boundary(a, conv);
      if (square_failure.empty()) {
        const auto dda = dga::boundary(da, conv);
        if (!dda.is_zero()) square_failure = fmt::format("sample {}: a = {}, d(d(a)) = {}", t, a.to_string(), dda.to_string());
      }
      const auto ab = dga::multiply(a, b, conv);
      if (leibniz_failure.empty()) {
        auto rhs = dga::multiply(da, b, conv);
        const auto right = dga::multiply(a, dga::boundary(b, conv), conv);
        rhs += sign_power(deg_a) == 1 ? right : -right;
        if (!(dga::boundary(ab, conv) == rhs)) {
          leibniz_failure = fmt::format("sample {}: a = {}, b = {}", t, a.to_string(), b.to_string());
        }
      }
      if (commute_failure.empty()) {
        auto ba = dga::multiply(b, a, conv);
        if (sign_power(deg_a * deg_b) == -1) ba = -ba;
        if (!(ab == ba)) commute_failure = fmt::format("sample {}: a = {}, b = {}", t, a.to_string(), b.to_string());
      }
    }
    const auto random_tag = fmt::format("{} random elements, seed {}", kSamples, seed);
    report.add(fmt::format("d^2 = 0 on {} ({})", random_tag, tag), square_failure.empty(), square_failure);
    report.add(fmt::format("graded Leibniz on {} ({})", random_tag, tag), leibniz_failure.empty(), leibniz_failure);
    report.add(fmt::format("graded commutativity on {} ({})", random_tag, tag), commute_failure.empty(),
               commute_failure);
  }
  return report;
}

}  // namespace sympow::verify
