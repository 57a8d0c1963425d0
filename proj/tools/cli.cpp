#include "cli.hpp"

#include <fstream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "sympow/complexes.hpp"
#include "sympow/homology.hpp"
#include "sympow/mod_matrix.hpp"
#include "sympow/verify.hpp"

namespace sympow::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  std::string command;
  std::optional<int> genus;
  std::optional<int> arity;
  std::optional<int> k;
  std::optional<int> modulus;
  std::optional<std::string> method;
  int trials = 5;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> prime;
  std::string suite = "all";
  std::optional<std::string> format;
  std::string out_path;
  int threads = 0;
  std::string complex_case = "cover";
};

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(fmt::format("{} is required", flag));
  return *v;
}

void validate(const Config& c) {
  if (c.genus && *c.genus < 1) throw UsageError("--genus must be >= 1");
  if (c.arity && *c.arity < 1) throw UsageError("--arity must be >= 1");
  if (c.genus && c.arity) throw UsageError("--genus and --arity are mutually exclusive");
  if (c.k && *c.k < 0) throw UsageError("--k must be >= 0");
  if (c.modulus && *c.modulus < 1) throw UsageError("--N must be >= 1");
  if (c.trials < 1) throw UsageError("--trials must be >= 1");
  if (c.threads < 0) throw UsageError("--threads must be >= 0");
  if (c.prime && (*c.prime < 3 || !modp::is_prime(*c.prime) || *c.prime >= (std::uint64_t{1} << 62))) {
    throw UsageError("--prime must be an odd prime below 2^62");
  }
  if (c.format && *c.format != "json" && *c.format != "csv" && *c.format != "text") {
    throw UsageError("--format must be json, csv or text");
  }
  if (c.method && *c.method != "generic" && *c.method != "snf" && *c.method != "count") {
    throw UsageError("--method must be generic, snf or count");
  }
}

std::string render(const homology::HomologyReport& r, const std::string& format) {
  if (format == "csv") return r.to_csv();
  if (format == "text") return r.to_text();
  return r.to_json();
}

homology::GenericOptions generic_options(const Config& c) {
  return {c.trials, c.seed, c.prime.value_or(homology::kFastPrime), c.threads};
}

homology::HomologyReport homology_of(const complexes::ChainComplex& complex, const Config& c,
                                     const std::string& default_method) {
  const auto method = c.method.value_or(default_method);
  if (method == "generic") {
    if (c.modulus) throw UsageError("--N applies to --method snf only");
    return homology::generic_homology(complex, generic_options(c));
  }
  if (method == "snf") {
    auto report = homology::integer_homology(complexes::base_change(complex, c.modulus.value_or(1)));
    return report;
  }
  throw UsageError(fmt::format("--method {} is not available for {}", method, c.command));
}

std::string run_betti(const Config& c, const std::string& format) {
  const int g = require(c.genus, "--genus");
  const int k = require(c.k, "--k");
  const auto method = c.method.value_or("count");
  if (method == "count") return render(homology::betti_report(g, k), format);
  if (method == "snf") {
    if (c.modulus && *c.modulus != 1) throw UsageError("betti uses N = 1; use cover-homology for finite covers");
    return render(homology::integer_homology(complexes::base_change(complexes::build_cover_complex(g, k), 1)), format);
  }
  throw UsageError("betti supports --method count or snf");
}

std::string run_homology(const Config& c, const std::string& format) {
  if (c.command == "wedge-homology") {
    const int n = require(c.arity, "--arity");
    const int k = require(c.k, "--k");
    if (k > n) throw UsageError("wedge-homology needs --k <= --arity");
    return render(homology_of(complexes::build_wedge_complex(n, k), c, "generic"), format);
  }
  const int g = require(c.genus, "--genus");
  const int k = require(c.k, "--k");
  if (c.command == "cover-homology") return render(homology_of(complexes::build_cover_complex(g, k), c, "generic"), format);
  if (k < 1) throw UsageError("quotient-homology needs --k >= 1");
  return render(homology_of(complexes::build_Q_complex(g, k), c, "generic"), format);
}

std::string run_export(const Config& c, const std::string& format) {
  const int k = require(c.k, "--k");
  std::optional<complexes::ChainComplex> complex;
  if (c.complex_case == "wedge") {
    const int n = c.arity ? *c.arity : require(c.genus, "--arity");
    if (k > n) throw UsageError("wedge export needs --k <= arity");
    complex = complexes::build_wedge_complex(n, k);
  } else if (c.complex_case == "cover") {
    complex = complexes::build_cover_complex(require(c.genus, "--genus"), k);
  } else if (c.complex_case == "q") {
    if (k < 1) throw UsageError("the quotient complex needs --k >= 1");
    complex = complexes::build_Q_complex(require(c.genus, "--genus"), k);
  } else {
    throw UsageError("--case must be cover, wedge or q");
  }
  if (format == "json") return complexes::export_json(*complex);
  if (format == "text") return complexes::export_text(*complex);
  throw UsageError("export supports --format text or json");
}

int run_verify(const Config& c, const std::string& format, std::string& report) {
  verify::SuiteParams params;
  params.genus = c.genus;
  params.arity = c.arity;
  params.k = c.k;
  params.modulus = c.modulus;
  params.opts.trials = c.trials;
  params.opts.seed = c.seed;
  params.opts.prime = c.prime.value_or(homology::kVerifyPrime);
  params.opts.threads = c.threads;
  const auto r = verify::run_suite(c.suite, params);
  if (format == "csv") {
    report = verify::to_csv(r);
  } else if (format == "text") {
    report = verify::to_text(r);
  } else {
    report = verify::to_json(r, params);
  }
  return r.passed() ? kExitOk : kExitFailure;
}

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("--genus", c.genus, "surface genus g");
  sub->add_option("--arity", c.arity, "number of circles n in the wedge");
  sub->add_option("--k", c.k, "symmetric power / truncation");
  sub->add_option("--N", c.modulus, "finite cover (Z/N)^(2g)");
  sub->add_option("--method", c.method, "generic | snf | count");
  sub->add_option("--trials", c.trials, "random specializations")->capture_default_str();
  sub->add_option("--seed", c.seed, "specialization seed")->capture_default_str();
  sub->add_option("--prime", c.prime, "specialization prime");
  sub->add_option("--format", c.format, "json | csv | text");
  sub->add_option("--out", c.out_path, "write the report here instead of stdout");
  sub->add_option("--threads", c.threads, "worker threads, 0 = all cores")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Chain complexes and homology of symmetric powers of surfaces and their covers", "sympow"};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"betti", "Betti numbers of Sym^k of a genus-g surface"},
      {"cover-homology", "homology of the universal cover complex (generic) or a finite cover (snf)"},
      {"quotient-homology", "homology of the quotient complex Q_k"},
      {"wedge-homology", "homology of the truncated wedge complex"},
      {"verify", "run a verification suite"},
      {"export", "write a complex in the SYMPOW-COMPLEX v1 format"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, c);
    if (name == "verify") sub->add_option("--suite", c.suite, "suite name or all")->capture_default_str();
    if (name == "export") sub->add_option("--case", c.complex_case, "cover | wedge | q")->capture_default_str();
    sub->callback([&c, name = name] { c.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'sympow --help' for usage\n";
    return kExitUsage;
  }
  if (c.command.empty()) {
    for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
  }

  std::string report;
  int code = kExitOk;
  try {
    validate(c);
    const auto format = c.format.value_or(c.command == "export" ? "text" : "json");
    if (c.command == "betti") {
      report = run_betti(c, format);
    } else if (c.command == "export") {
      report = run_export(c, format);
    } else if (c.command == "verify") {
      code = run_verify(c, format, report);
    } else {
      report = run_homology(c, format);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }

  if (c.out_path.empty()) {
    out << report;
  } else {
    std::ofstream file(c.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << c.out_path << "\n";
      return kExitFailure;
    }
    file << report;
  }
  return code;
}

}  // namespace sympow::cli
