#include "idim/corpus.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>

#include "idim/error.hpp"

namespace idim {

namespace {

std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back(Edge{u, v});
  }
  return pairs;
}

// Level sequences of rooted trees, following Wright, Richmond, Odlyzko and
// McKay's constant-time free tree generator.
using Layout = std::vector<std::size_t>;

std::pair<Layout, Layout> split_tree(const Layout& layout) {
  bool one_found = false;
  std::size_t m = layout.size();
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  Layout left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  Layout rest{0};
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

std::optional<Layout> next_rooted_tree(const Layout& pred, std::optional<std::size_t> p_hint = std::nullopt) {
  std::size_t p;
  if (p_hint) {
    p = *p_hint;
  } else {
    p = pred.size() - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout result(pred);
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

std::optional<Layout> next_tree(const Layout& candidate) {
  auto [left, rest] = split_tree(candidate);
  const std::size_t left_height = *std::max_element(left.begin(), left.end());
  const std::size_t rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return candidate;

  const std::size_t p = left.size();
  auto next = next_rooted_tree(candidate, p);
  if (next && candidate[p] > 2) {
    auto [new_left, new_rest] = split_tree(*next);
    const std::size_t h = *std::max_element(new_left.begin(), new_left.end());
    // Overwrite the tail with 1, 2, ..., h+1.
    const std::size_t len = h + 1;
    for (std::size_t i = 0; i < len; ++i) (*next)[next->size() - len + i] = i + 1;
  }
  return next;
}

Graph layout_to_graph(const Layout& layout) {
  std::vector<Edge> edges;
  std::vector<std::size_t> last_at_level(layout.size() + 1, 0);
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] > 0) edges.push_back(make_edge(static_cast<Vertex>(last_at_level[layout[i] - 1]), static_cast<Vertex>(i)));
    last_at_level[layout[i]] = i;
  }
  return Graph::build(layout.size(), edges);
}

}  // namespace

void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph&)>& visit) {
  const auto pairs = all_pairs(n);
  if (pairs.size() >= 63) throw Error("labeled enumeration is limited to n <= 11");
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) edges.push_back(pairs[i]);
    }
    visit(Graph::build(n, edges));
  }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + index * 0x9E3779B97F4A7C15ULL + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double corpus_edge_probability(std::size_t index) {
  constexpr double kProbabilities[] = {0.2, 0.5, 0.8};
  return kProbabilities[index % 3];
}

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (const Edge& e : all_pairs(n)) {
    const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (x < p) edges.push_back(e);
  }
  return Graph::build(n, edges);
}

Graph random_corpus_graph(std::size_t n, std::uint64_t seed, std::size_t index) {
  return random_gnp(n, corpus_edge_probability(index), derive_seed(seed, index));
}

std::vector<Graph> free_trees(std::size_t n) {
  if (n == 0) throw Error("a tree needs at least one vertex");
  if (n == 1) return {Graph::build(1, std::span<const Edge>{})};
  if (n == 2) return {Graph::build(2, {{0, 1}})};

  // Start from the path rooted at its center.
  Layout layout;
  for (std::size_t i = 0; i <= n / 2; ++i) layout.push_back(i);
  for (std::size_t i = 1; i < (n + 1) / 2; ++i) layout.push_back(i);

  std::vector<Graph> trees;
  std::optional<Layout> current = layout;
  while (current) {
    current = next_tree(*current);
    if (!current) break;
    trees.push_back(layout_to_graph(*current));
    current = next_rooted_tree(*current);
  }
  return trees;
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error("a tree needs at least one vertex");
  if (n <= 2) return n == 1 ? Graph::build(1, std::span<const Edge>{}) : Graph::build(2, {{0, 1}});
  std::mt19937_64 rng(seed);
  std::vector<Vertex> pruefer(n - 2);
  for (auto& x : pruefer) x = static_cast<Vertex>(rng() % n);

  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : pruefer) ++degree[x];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  std::vector<Edge> edges;
  for (Vertex x : pruefer) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back(make_edge(leaf, x));
    if (--degree[x] == 1) leaves.insert(x);
  }
  const Vertex a = *leaves.begin();
  const Vertex b = *std::next(leaves.begin());
  edges.push_back(make_edge(a, b));
  return Graph::build(n, edges);
}

}  // namespace idim
