#include <algorithm>

#include <fmt/format.h>

#include <json.hpp>

#include "sympow/verify.hpp"

namespace sympow::verify {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::add(std::string name, bool pass, std::string detail) {
  checks.push_back(Check{std::move(name), pass, std::move(detail)});
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

std::string to_json(const Report& report, const SuiteParams& params) {
  nlohmann::ordered_json doc;
  auto optional_int = [](const std::optional<int>& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(); };
  doc["suite"] = report.suite;
  doc["g"] = optional_int(params.genus);
  doc["n"] = optional_int(params.arity);
  doc["k"] = optional_int(params.k);
  doc["N"] = optional_int(params.modulus);
  doc["prime"] = params.opts.prime;
  doc["trials"] = params.opts.trials;
  doc["seed"] = params.opts.seed;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back(nlohmann::ordered_json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  doc["checks"] = std::move(checks);
  doc["pass"] = report.passed();
  return doc.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const Report& report) {
  std::string out = "suite,check,pass,detail\n";
  for (const auto& c : report.checks) {
    out += fmt::format("{},{},{},{}\n", csv_field(report.suite), csv_field(c.name), c.pass ? "true" : "false",
                       csv_field(c.detail));
  }
  return out;
}

std::string to_text(const Report& report) {
  std::string out = fmt::format("suite {}\n", report.suite);
  for (const auto& c : report.checks) {
    out += fmt::format("  [{}] {}\n", c.pass ? "PASS" : "FAIL", c.name);
    if (!c.detail.empty()) out += fmt::format("         {}\n", c.detail);
  }
  const auto failed = std::count_if(report.checks.begin(), report.checks.end(), [](const Check& c) { return !c.pass; });
  out += fmt::format("{} checks, {} failed\n", report.checks.size(), failed);
  return out;
}

}  // namespace sympow::verify
