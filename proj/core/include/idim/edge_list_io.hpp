#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idim/families.hpp"
#include "idim/graph.hpp"

namespace idim {

/// Metadata carried in structured comments of an edge-list file:
///   # family: grn 3 7
///   # label 0 u1
struct EdgeListMetadata {
  std::optional<FamilySpec> family;
  /// Either empty or one entry per vertex.
  std::vector<std::string> labels;
};

struct EdgeListDocument {
  Graph graph;
  EdgeListMetadata metadata;
};

/// Parses the edge-list text format: first data line "n m", then m lines
/// "u v" with 0-based endpoints. '#' starts a comment line; blank lines are
/// ignored. Throws ParseError carrying the offending line number.
EdgeListDocument parse_edge_list(std::string_view text);
EdgeListDocument read_edge_list_file(const std::string& path);

/// Writes "n m" then edges with u < v in lexicographic order, preceded by any
/// metadata comments.
void write_edge_list(std::ostream& out, const Graph& g, const EdgeListMetadata& meta = {});
std::string format_edge_list(const Graph& g, const EdgeListMetadata& meta = {});
void write_edge_list_file(const std::string& path, const Graph& g, const EdgeListMetadata& meta = {});

}  // namespace idim
