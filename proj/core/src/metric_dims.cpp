#include "idim/metric_dims.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "combinations.hpp"
#include "idim/error.hpp"

namespace idim {

namespace {

// True iff the rows (one signature vector per item) are pairwise distinct.
bool rows_distinct(std::vector<std::vector<Distance>>& rows) {
  std::sort(rows.begin(), rows.end());
  return std::adjacent_find(rows.begin(), rows.end()) == rows.end();
}

template <class Test>
MetricDimResult ascending_search(const Graph& g, MetricKind kind, std::size_t from, Test&& test) {
  const std::size_t n = g.order();
  for (std::size_t k = from; k <= n; ++k) {
    MetricDimResult result{kind, k, g.empty_set()};
    const bool found = detail::for_each_combination(n, k, [&](const std::vector<std::size_t>& idx) {
      VertexSet s(n);
      for (std::size_t v : idx) s.insert(static_cast<Vertex>(v));
      if (!test(s)) return false;
      result.basis = std::move(s);
      return true;
    });
    if (found) return result;
  }
  throw std::logic_error("no metric generator found: " + g.describe());
}

}  // namespace

std::string_view to_string(MetricKind k) { return k == MetricKind::adjacency ? "adjacency" : "edge_metric"; }

bool is_adjacency_generator(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw Error("vertex set universes differ");
  std::vector<VertexSet> traces;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!s.contains(v)) traces.push_back(g.neighbors(v) & s);
  }
  std::sort(traces.begin(), traces.end(), lex_less);
  return std::adjacent_find(traces.begin(), traces.end()) == traces.end();
}

MetricDimResult dim_a(const Graph& g) {
  return ascending_search(g, MetricKind::adjacency, 0,
                          [&](const VertexSet& s) { return is_adjacency_generator(g, s); });
}

Distance edge_distance(const Graph& g, Vertex v, const Edge& e) {
  if (e.u >= g.order() || e.v >= g.order() || e.u == e.v || !g.has_edge(e)) {
    throw Error("edge not in graph");
  }
  return std::min(g.distance(v, e.u), g.distance(v, e.v));
}

bool is_edge_metric_generator(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw Error("vertex set universes differ");
  if (s.empty()) return false;
  std::vector<std::vector<Distance>> rows;
  rows.reserve(g.size());
  for (const Edge& e : g.edges()) {
    std::vector<Distance> row;
    for (Vertex x : s) row.push_back(std::min(g.distance(x, e.u), g.distance(x, e.v)));
    rows.push_back(std::move(row));
  }
  return rows_distinct(rows);
}

MetricDimResult dim_e(const Graph& g) {
  if (g.size() == 0) throw Error("no edges");
  return ascending_search(g, MetricKind::edge_metric, 1,
                          [&](const VertexSet& s) { return is_edge_metric_generator(g, s); });
}

}  // namespace idim
