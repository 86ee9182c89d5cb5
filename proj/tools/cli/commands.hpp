#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace idim::cli {

enum class Method { brute, structural, formula, automatic };

struct DimiArgs {
  std::string graph_file;
  Method method = Method::automatic;
  bool canonical = false;
};

struct RhoArgs {
  std::string graph_file;
  bool all = false;
};

struct EcriticalArgs {
  std::string graph_file;
  std::uint32_t u = 0;
  std::uint32_t v = 0;
};

struct GraphArgs {
  std::string graph_file;
};

struct GenArgs {
  std::string family;
  std::vector<std::size_t> params;
  /// Edge-list destination; "-" writes the edge list to stdout instead of a report.
  std::string out;
};

struct ReduceArgs {
  std::string cnf_file;
  /// Writes PREFIX.edges and PREFIX.labels.json when set.
  std::string out_prefix;
  /// Decide satisfiability through the maximum 2-packing of the reduction graph.
  bool solve = false;
};

struct ExtractArgs {
  std::string cnf_file;
  std::string basis_file;
};

struct VerifyArgs {
  std::optional<std::size_t> exhaustive;
  std::optional<std::size_t> random_order;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  bool slow = false;
  bool metric = true;
};

Report cmd_dimi(const DimiArgs& args);
Report cmd_rho(const RhoArgs& args);
Report cmd_ecritical(const EcriticalArgs& args);
Report cmd_dima(const GraphArgs& args);
Report cmd_dime(const GraphArgs& args);
Report cmd_classify(const GraphArgs& args);
Report cmd_gen(const GenArgs& args);
Report cmd_reduce(const ReduceArgs& args);
Report cmd_extract(const ExtractArgs& args);
Report cmd_verify(const VerifyArgs& args);

/// Parses a basis file: vertex indices separated by whitespace or commas,
/// '#' comments, optional surrounding brackets (so a JSON array works too).
std::vector<std::uint32_t> parse_basis_text(std::string_view text);

}  // namespace idim::cli
