#include "doctest.h"
#include "fixtures.hpp"
#include "idim/corpus.hpp"
#include "idim/error.hpp"
#include "idim/incidence.hpp"
#include "idim/metric_dims.hpp"
#include "oracles.hpp"

using namespace idim;
using namespace idim::fixtures;

TEST_CASE("dim_adjacency") {
  CHECK(dim_a(path(3)).value == 1);
  CHECK(dim_a(Graph::build(2, {{0, 1}})).value == 1);
  CHECK(dim_a(complete(5)).value == 4);
  CHECK(is_adjacency_generator(path(3), dim_a(path(3)).basis));
  CHECK(dim_a(path(3)).kind == MetricKind::adjacency);
  CHECK(dim_a(Graph::build(1, std::span<const Edge>{})).value == 0);
  CHECK(is_adjacency_generator(path(3), VertexSet(3, {0})));
  CHECK(is_adjacency_generator(spine_tree(), VertexSet::full(15)));
  // K_{2,3} with sides {0,1} and {2,3,4}.
  CHECK(is_adjacency_generator(kbip(2, 3), VertexSet(5, {0, 2, 3})));
}

TEST_CASE("dim_edge_metric") {
  CHECK(dim_e(path(3)).value == 1);
  CHECK(dim_e(path(4)).value == 1);
  CHECK(dim_e(Graph::build(2, {{0, 1}})).value == 1);
  CHECK_FALSE(is_edge_metric_generator(path(3), VertexSet(3)));
  CHECK_THROWS_WITH_AS(dim_e(Graph::build(3, std::span<const Edge>{})), "no edges", Error);
  CHECK(edge_distance(path(4), 0, {2, 3}) == 2);
  CHECK(edge_distance(path(4), 2, {2, 3}) == 0);
  CHECK(edge_distance(Graph::build(4, {{0, 1}, {2, 3}}), 0, {2, 3}) == kInfinite);
}

TEST_CASE("complete bipartite: dim_I = dim_A = dim_e = r+t-2 except K_{1,1}") {
  for (std::size_t r = 1; r <= 4; ++r)
    for (std::size_t t = r; t <= 4; ++t) {
      const Graph g = kbip(r, t);
      const std::size_t i = dim_i_brute(g).value;
      const std::size_t a = dim_a(g).value;
      const std::size_t e = dim_e(g).value;
      if (r == 1 && t == 1) {
        CHECK(i == 0);
        CHECK(a == 1);
        CHECK(e == 1);
      } else {
        CHECK(i == r + t - 2);
        CHECK(a == r + t - 2);
        CHECK(e == r + t - 2);
      }
    }
}

TEST_CASE("metric solvers agree with subset enumeration (exhaustive n<=5)") {
  for (std::size_t n = 1; n <= 5; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      const auto a = dim_a(g);
      REQUIRE(a.value == oracle::dim_a(g));
      REQUIRE(is_adjacency_generator(g, a.basis));
      if (g.size() > 0) {
        const auto e = dim_e(g);
        REQUIRE(e.value == oracle::dim_e(g));
        REQUIRE(is_edge_metric_generator(g, e.basis));
      }
    });
}

TEST_CASE("2K_2 has a smaller incidence dimension than adjacency dimension") {
  const Graph g = Graph::build(4, {{0, 1}, {2, 3}});
  CHECK(dim_i_brute(g).value == 1);
  CHECK(dim_a(g).value == 2);
  CHECK(dim_e(g).value == 1);
}

TEST_CASE("incidence dimension dominates both metric dimensions without K_2 components (random n=6..8)") {
  for (std::size_t i = 0; i < 120; ++i) {
    const Graph g = random_corpus_graph(6 + i % 3, 5, i);
    bool skip = false;
    for (Vertex v = 0; v < g.order(); ++v) skip = skip || g.degree(v) == 0;
    for (const Edge& e : g.edges()) skip = skip || (g.degree(e.u) == 1 && g.degree(e.v) == 1);
    if (skip) continue;
    const std::size_t di = dim_i_structural(g).value;
    CHECK(di >= dim_a(g).value);
    CHECK(di >= dim_e(g).value);
  }
}
