#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>

#include "idim/families.hpp"
#include "idim/graph.hpp"
#include "idim/packing.hpp"

namespace idim {

enum class DimMethod { brute, structural, formula };

std::string_view to_string(DimMethod m);

struct DimResult {
  std::size_t value = 0;
  VertexSet basis;
  DimMethod method = DimMethod::brute;
  /// The edge e with |P_e(G)| = k; set by the structural solver only.
  std::optional<Edge> achieving_edge;
};

/// x resolves {e, f} iff x is an endpoint of exactly one of them.
/// Throws Error("identical edges") when e == f and Error("edge not in graph")
/// when either is absent.
bool resolves(const Graph& g, Vertex x, const Edge& e, const Edge& f);

/// Every pair of distinct edges is resolved by some member of s.
///
/// Two edges e, f go unresolved exactly when (e △ f) ∩ s = ∅, i.e. when
/// e ∩ s = f ∩ s. So s is a generator iff e ↦ e ∩ s is injective on E(g).
bool is_incidence_generator(const Graph& g, const VertexSet& s);

struct BruteOptions {
  /// Only test sizes n-ρ-1 and n-ρ. Disable for a search that assumes nothing
  /// about ρ (ascending from size 0).
  bool use_sandwich = true;
};

/// Subset search in ascending size, lexicographic within a size. The basis
/// is the lexicographically smallest minimum generator.
DimResult dim_i_brute(const Graph& g, const BruteOptions& options = {});

/// n - max_e |P_e(G)|, with basis V \ P_e for the first achieving edge (edges
/// in ascending order). With `canonical`, the basis is replaced by the
/// lexicographically smallest generator of that size.
/// Throws Error("structural method requires an edge") on edgeless graphs.
DimResult dim_i_structural(const Graph& g, bool canonical = false);

/// Closed formulas: complete n>=3 -> n-1; path n>=3 -> floor(2(n-1)/3);
/// cycle n>=4 -> floor(2n/3); complete_bipartite r,t>=1 -> r+t-2.
/// Throws Error("formula domain violated") otherwise.
std::size_t dim_i_formula(const FamilySpec& spec);

/// Lexicographically smallest incidence generator of exactly `size`
/// vertices, if any.
std::optional<VertexSet> first_generator_of_size(const Graph& g, std::size_t size);

enum class DimClass {
  minus_one,  // dim_I = n - ρ - 1
  exact,      // dim_I = n - ρ
};

/// "CLASS_MINUS_ONE" / "CLASS_EXACT"
std::string_view to_string(DimClass c);

DimClass classify(const Graph& g);

struct SymdiffReport {
  DimClass cls = DimClass::exact;
  std::size_t max_packings = 0;
  /// First pair (in enumeration order) of maximum packings whose symmetric
  /// difference induces at least one edge.
  std::optional<std::pair<VertexSet, VertexSet>> witness_pair;
};

/// Propagates WitnessCapExceeded from packing enumeration.
SymdiffReport check_symdiff_condition(const Graph& g, std::size_t witness_cap = kDefaultWitnessCap);

/// Every pair of distinct vertices has a common neighbor. Throws
/// Error("characterization requires connected, >=2 edges") otherwise.
bool common_neighbor_characterization(const Graph& g);

}  // namespace idim
