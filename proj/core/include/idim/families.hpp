#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idim/graph.hpp"

namespace idim {

enum class Family {
  path,
  cycle,
  complete,
  complete_bipartite,
  g_rn,       // K_r, pendant v_i on each u_i, extra pendant w on v_1 (n = 2r+1)
  gprime_rn,  // K_r, pendants v_1..v_{n-r-1}, hub v_{n-r} on u_{n-r}..u_r, edge v_1v_2
};

struct FamilySpec {
  Family family = Family::path;
  std::vector<std::size_t> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Accepts the canonical names (path, cycle, complete, complete_bipartite,
/// grn, gprime) and a few aliases (kbip, G_rn, Gprime_rn).
std::optional<Family> parse_family_name(std::string_view name);
std::string_view family_name(Family f);
std::size_t family_arity(Family f);

/// "path 8", "grn 3 7"
std::string to_string(const FamilySpec& spec);
/// Inverse of to_string; nullopt on unknown name or wrong arity.
std::optional<FamilySpec> parse_family_spec(std::string_view text);

struct FamilyGraph {
  FamilySpec spec;
  Graph graph;
  /// labels[v] names vertex v in the construction (e.g. "u1", "v3", "w").
  std::vector<std::string> labels;
};

/// Builds the named family. Throws Error("family parameters invalid") when the
/// parameters fall outside the family's range:
///   path n>=1; cycle n>=3; complete n>=1; complete_bipartite r,t>=1;
///   grn (r, n): n odd, r = floor(n/2), r >= 3;
///   gprime (r, n): r >= 3, 2r >= n, r < n-1.
FamilyGraph generate_family(const FamilySpec& spec);

}  // namespace idim
