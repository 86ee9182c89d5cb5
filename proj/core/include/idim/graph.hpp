#pragma once

#include <compare>
#include <initializer_list>
#include <utility>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "idim/vertex_set.hpp"

namespace idim {

using Distance = std::uint32_t;

/// Distance between vertices in different components. Compares greater than
/// every finite distance.
inline constexpr Distance kInfinite = std::numeric_limits<Distance>::max();

/// Unordered vertex pair, stored normalized with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  bool has_endpoint(Vertex x) const noexcept { return x == u || x == v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes {a, b}; throws Error("self-loop") when a == b.
Edge make_edge(Vertex a, Vertex b);

std::string to_string(const Edge& e);

/// Immutable simple undirected graph on vertices 0..n-1 with all-pairs hop
/// distances computed at construction.
class Graph {
 public:
  /// Empty graph (no vertices).
  Graph() = default;

  /// Builds a graph, deduplicating edges. Throws Error("self-loop") or
  /// Error("vertex out of range") on bad pairs.
  static Graph build(std::size_t n, std::span<const Edge> edges);
  static Graph build(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  /// Sorted ascending.
  std::span<const Edge> edges() const noexcept { return edges_; }

  const VertexSet& neighbors(Vertex v) const;
  /// Closed ball of radius two: all x with dist(v, x) <= 2, v included.
  const VertexSet& ball2(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).count(); }

  Distance distance(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  bool is_connected() const;

  /// G - e. Throws Error("edge not in graph") when e is absent.
  Graph without_edge(const Edge& e) const;
  /// G + e (no-op if already present).
  Graph with_edge(const Edge& e) const;
  /// G[d], relabeled 0..|d|-1 in ascending original order.
  Graph induced(const VertexSet& d) const;

  /// Graphs compare equal when vertex count and edge set agree; distances
  /// are a function of those.
  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

  /// "n=5 edges=[0-1 1-2]"
  std::string describe() const;

 private:
  Graph(std::size_t n, std::vector<Edge> edges);
  void compute_distances();
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adjacency_;
  std::vector<VertexSet> ball2_;
  std::vector<Distance> dist_;  // row-major n x n
};

/// True iff every edge lies on a triangle. Vacuously true for edgeless graphs.
bool is_edge_triangular(const Graph& g);

bool is_tree(const Graph& g);

}  // namespace idim
