#pragma once

#include <cstddef>
#include <string_view>

#include "idim/graph.hpp"

namespace idim {

enum class MetricKind { adjacency, edge_metric };

std::string_view to_string(MetricKind k);

struct MetricDimResult {
  MetricKind kind = MetricKind::adjacency;
  std::size_t value = 0;
  /// Lexicographically smallest minimum generator.
  VertexSet basis;
};

/// For all distinct u, v outside s some x in s is adjacent to exactly one of
/// them (equivalently N(u) ∩ s ≠ N(v) ∩ s).
bool is_adjacency_generator(const Graph& g, const VertexSet& s);

/// Adjacency dimension.
MetricDimResult dim_a(const Graph& g);

/// min(d(v, e.u), d(v, e.v)); kInfinite when v reaches neither endpoint.
/// Throws Error("edge not in graph") when e is absent.
Distance edge_distance(const Graph& g, Vertex v, const Edge& e);

/// Nonempty s such that every pair of distinct edges has a member with
/// different edge distances to them. The empty set never qualifies.
bool is_edge_metric_generator(const Graph& g, const VertexSet& s);

/// Edge metric dimension (at least 1). Throws Error("no edges") on edgeless graphs.
MetricDimResult dim_e(const Graph& g);

}  // namespace idim
