#include "idim/graph.hpp"

#include <algorithm>
#include <sstream>

#include "idim/error.hpp"

namespace idim {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw Error("self-loop");
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw Error("vertex out of range");
    normalized.push_back(make_edge(e.u, e.v));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
  return Graph(n, std::move(normalized));
}

Graph Graph::build(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) list.push_back(Edge{a, b});
  return build(n, list);
}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  adjacency_.assign(n_, VertexSet(n_));
  for (const Edge& e : edges_) {
    adjacency_[e.u].insert(e.v);
    adjacency_[e.v].insert(e.u);
  }
  compute_distances();
}

void Graph::compute_distances() {
  dist_.assign(n_ * n_, kInfinite);
  ball2_.assign(n_, VertexSet(n_));
  std::vector<Vertex> queue(n_);
  for (Vertex s = 0; s < n_; ++s) {
    Distance* row = &dist_[std::size_t{s} * n_];
    row[s] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex x = queue[head++];
      for (Vertex y : adjacency_[x]) {
        if (row[y] == kInfinite) {
          row[y] = row[x] + 1;
          queue[tail++] = y;
        }
      }
    }
    for (Vertex t = 0; t < n_; ++t) {
      if (row[t] <= 2) ball2_[s].insert(t);
    }
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) throw Error("vertex out of range");
}

const VertexSet& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

const VertexSet& Graph::ball2(Vertex v) const {
  check_vertex(v);
  return ball2_[v];
}

Distance Graph::distance(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return dist_[std::size_t{u} * n_ + v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacency_[u].contains(v);
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  for (Vertex v = 1; v < n_; ++v) {
    if (dist_[v] == kInfinite) return false;
  }
  return true;
}

Graph Graph::without_edge(const Edge& e) const {
  const Edge key = make_edge(e.u, e.v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) throw Error("edge not in graph");
  std::vector<Edge> rest;
  rest.reserve(edges_.size() - 1);
  rest.insert(rest.end(), edges_.begin(), it);
  rest.insert(rest.end(), it + 1, edges_.end());
  return Graph(n_, std::move(rest));
}

Graph Graph::with_edge(const Edge& e) const {
  std::vector<Edge> all(edges_);
  all.push_back(e);
  return build(n_, all);
}

Graph Graph::induced(const VertexSet& d) const {
  if (d.universe() != n_) throw Error("vertex set universes differ");
  std::vector<Vertex> relabel(n_, static_cast<Vertex>(n_));
  Vertex next = 0;
  for (Vertex v : d) relabel[v] = next++;
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (d.contains(e.u) && d.contains(e.v)) kept.push_back(Edge{relabel[e.u], relabel[e.v]});
  }
  return Graph(next, std::move(kept));
}

std::string Graph::describe() const {
  std::ostringstream out;
  out << "n=" << n_ << " edges=[";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i != 0) out << ' ';
    out << to_string(edges_[i]);
  }
  out << ']';
  return out.str();
}

bool is_edge_triangular(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (!g.neighbors(e.u).intersects(g.neighbors(e.v))) return false;
  }
  return true;
}

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() + 1 == g.order() && g.is_connected(); }

}  // namespace idim
