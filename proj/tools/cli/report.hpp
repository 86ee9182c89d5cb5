#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idim/vertex_set.hpp"
#include "json.hpp"

namespace idim::cli {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool passed = true;
  /// Counterexample or explanation; empty when nothing to add.
  std::string detail;
};

/// Output of one command: parameter echo, payload, and self-checks.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  /// Structured payload emitted only in JSON (text shows the checks instead).
  Json details = Json::object();
  std::vector<Check> checks;
  std::optional<double> elapsed_ms;

  void check(std::string name, bool passed, std::string detail = {});
  bool passed() const;
};

/// Ascending array of members.
Json set_json(const VertexSet& s);

std::string render_json(const Report& r);
/// Aligned "key  value" lines followed by one line per check.
std::string render_text(const Report& r);

}  // namespace idim::cli
