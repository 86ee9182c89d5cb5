#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "idim/graph.hpp"

namespace idim {

inline constexpr std::size_t kDefaultWitnessCap = 1'000'000;

struct PackingOptions {
  /// Collect every maximum 2-packing into PackingResult::all_witnesses.
  bool enumerate_all = false;
  /// Enumeration throws WitnessCapExceeded past this many witnesses.
  std::size_t witness_cap = kDefaultWitnessCap;
};

struct PackingResult {
  std::size_t size = 0;
  /// Lexicographically smallest maximum 2-packing.
  VertexSet witness;
  /// Every maximum 2-packing in lexicographic order, when requested.
  std::optional<std::vector<VertexSet>> all_witnesses;
};

/// An e-critical packing P_e(G): a maximum-cardinality 2-packing of G - e
/// among those satisfying "if |{u,v} ∩ P| < 2 then P is a 2-packing of G".
struct CriticalPackingResult {
  Edge edge;
  std::size_t size = 0;
  /// Lexicographically smallest among the maximum admissible packings.
  VertexSet witness;
  bool is_packing_of_graph = false;
  bool contains_both_endpoints = false;
};

/// Every pair of distinct members is at distance > 2 (different components
/// count as infinitely far apart).
bool is_packing(const Graph& g, const VertexSet& p);

/// The packing number ρ(g) with a canonical witness.
PackingResult max_packing(const Graph& g, const PackingOptions& options = {});

/// Throws Error("edge not in graph") when e is not an edge of g.
CriticalPackingResult e_critical_packing(const Graph& g, const Edge& e);

/// True iff g has exactly one maximum 2-packing.
bool has_unique_max_packing(const Graph& g);

}  // namespace idim
