#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace idim::cli {

void Report::check(std::string name, bool passed, std::string detail) {
  checks.push_back(Check{std::move(name), passed, std::move(detail)});
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Json set_json(const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

std::string render_json(const Report& r) {
  Json doc;
  doc["command"] = r.command;
  doc["inputs"] = r.inputs;
  doc["results"] = r.results;
  if (!r.details.empty()) doc["details"] = r.details;
  Json checks = Json::array();
  for (const Check& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  doc["checks"] = std::move(checks);
  doc["passed"] = r.passed();
  if (r.elapsed_ms) doc["elapsed_ms"] = *r.elapsed_ms;
  return doc.dump(2) + "\n";
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string render_text(const Report& r) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("command", r.command);
  for (const auto& [k, v] : r.inputs.items()) rows.emplace_back(k, scalar_text(v));
  for (const auto& [k, v] : r.results.items()) rows.emplace_back(k, scalar_text(v));
  if (r.elapsed_ms) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(3) << *r.elapsed_ms;
    rows.emplace_back("elapsed_ms", ms.str());
  }

  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());

  std::ostringstream out;
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width + 2)) << k << v << '\n';
  for (const Check& c : r.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  return out.str();
}

}  // namespace idim::cli
