#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "idim/graph.hpp"

namespace idim {

/// Calls visit for every labeled simple graph on n vertices; graph number k
/// holds the pairs (u<v, lexicographic) selected by the bits of k.
void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph&)>& visit);

/// splitmix64 of base + index. Per-graph seeds make corpus members
/// independent of generation order.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Edge probability for corpus member `index`: cycles 0.2, 0.5, 0.8.
double corpus_edge_probability(std::size_t index);

/// Erdős–Rényi G(n, p) from a mt19937_64 seeded with `seed`. Pairs are drawn
/// in lexicographic order; a pair is kept when the top 53 bits of the next
/// engine output, scaled to [0, 1), fall below p.
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);

/// Member `index` of the seeded random corpus:
/// random_gnp(n, corpus_edge_probability(index), derive_seed(seed, index)).
Graph random_corpus_graph(std::size_t n, std::uint64_t seed, std::size_t index);

/// All free trees on n vertices up to isomorphism (n >= 1).
std::vector<Graph> free_trees(std::size_t n);

/// Random labeled tree on n vertices decoded from a seeded Prüfer sequence.
Graph random_tree(std::size_t n, std::uint64_t seed);

}  // namespace idim
