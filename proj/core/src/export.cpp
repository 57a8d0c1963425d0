#include <fmt/format.h>

#include <json.hpp>

#include "sympow/complexes.hpp"

namespace sympow::complexes {

std::string export_text(const ChainComplex& c) {
  std::string out = fmt::format("SYMPOW-COMPLEX v1 case={} g={} k={} degrees={}\n", to_string(c.kind()),
                                c.shape().rank, c.k(), c.top_degree());
  for (int d = 0; d <= c.top_degree(); ++d) {
    const auto& module = c.module(d);
    out += fmt::format("MODULE {} rank={}\n", d, module.rank());
    for (const auto& m : module.basis()) out += dga::to_string(m, c.shape()) + "\n";
  }
  for (int d = 1; d <= c.top_degree(); ++d) {
    const auto& b = c.boundary_matrix(d);
    out += fmt::format("BOUNDARY {} entries={}\n", d, b.nonzeros());
    for (std::size_t col = 0; col < b.cols(); ++col) {
      for (const auto& [row, entry] : b.column(col)) out += fmt::format("{} {} {}\n", row, col, entry.to_string());
    }
  }
  return out;
}

std::string export_json(const ChainComplex& c) {
  nlohmann::ordered_json doc;
  doc["format"] = "SYMPOW-COMPLEX";
  doc["version"] = 1;
  doc["case"] = to_string(c.kind());
  doc["g"] = c.shape().rank;
  doc["k"] = c.k();
  doc["degrees"] = c.top_degree();
  auto modules = nlohmann::ordered_json::array();
  for (int d = 0; d <= c.top_degree(); ++d) {
    nlohmann::ordered_json m;
    m["degree"] = d;
    m["rank"] = c.rank(d);
    auto basis = nlohmann::ordered_json::array();
    for (const auto& mono : c.module(d).basis()) basis.push_back(dga::to_string(mono, c.shape()));
    m["basis"] = std::move(basis);
    modules.push_back(std::move(m));
  }
  doc["modules"] = std::move(modules);
  auto boundaries = nlohmann::ordered_json::array();
  for (int d = 1; d <= c.top_degree(); ++d) {
    const auto& b = c.boundary_matrix(d);
    nlohmann::ordered_json entry;
    entry["degree"] = d;
    entry["entries"] = b.nonzeros();
    auto list = nlohmann::ordered_json::array();
    for (std::size_t col = 0; col < b.cols(); ++col) {
      for (const auto& [row, value] : b.column(col)) {
        list.push_back(nlohmann::ordered_json{{"row", row}, {"col", col}, {"value", value.to_string()}});
      }
    }
    entry["matrix"] = std::move(list);
    boundaries.push_back(std::move(entry));
  }
  doc["boundaries"] = std::move(boundaries);
  return doc.dump(2) + "\n";
}

}  // namespace sympow::complexes
