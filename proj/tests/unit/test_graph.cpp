#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "idim/corpus.hpp"
#include "idim/edge_list_io.hpp"
#include "idim/error.hpp"
#include "idim/families.hpp"
#include "idim/graph.hpp"
#include "oracles.hpp"

using namespace idim;

TEST_CASE("build_graph") {
  SUBCASE("single edge") {
    const Graph g = Graph::build(2, {{0, 1}});
    CHECK(g.distance(0, 1) == 1);
  }
  SUBCASE("pendant path distances") {
    const Graph g = fixtures::pendant_path();
    CHECK(g.distance(0, 3) == 3);
    CHECK(g.distance(0, 4) == 2);
  }
  SUBCASE("edgeless graph is all infinite off the diagonal") {
    const Graph g = Graph::build(3, std::span<const Edge>{});
    for (Vertex u = 0; u < 3; ++u)
      for (Vertex v = 0; v < 3; ++v) CHECK(g.distance(u, v) == (u == v ? 0 : kInfinite));
  }
  SUBCASE("duplicates collapse") {
    const Graph g = Graph::build(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.size() == 1);
  }
  SUBCASE("errors") {
    CHECK_THROWS_WITH_AS(Graph::build(3, {{1, 1}}), "self-loop", Error);
    CHECK_THROWS_WITH_AS(Graph::build(3, {{0, 3}}), "vertex out of range", Error);
  }
}

TEST_CASE("neighbors") {
  CHECK(fixtures::pendant_path().neighbors(1) == VertexSet(5, {0, 2, 4}));
  CHECK(fixtures::complete(4).neighbors(0) == VertexSet(4, {1, 2, 3}));
  CHECK(Graph::build(4, std::span<const Edge>{}).neighbors(2).empty());
}

TEST_CASE("remove_edge") {
  SUBCASE("pendant path minus e isolates vertex 0") {
    const Graph g = fixtures::pendant_path().without_edge({0, 1});
    for (Vertex x = 1; x < 5; ++x) CHECK(g.distance(0, x) == kInfinite);
  }
  SUBCASE("C4 minus an edge is P4") {
    const Graph g = fixtures::cycle(4).without_edge({0, 3});
    CHECK(g == fixtures::path(4));
  }
  SUBCASE("K3 minus {0,1}") {
    const Graph g = fixtures::complete(3).without_edge({0, 1});
    CHECK(g.distance(0, 1) == 2);
  }
  CHECK_THROWS_WITH_AS(fixtures::path(3).without_edge({0, 2}), "edge not in graph", Error);
}

TEST_CASE("induced_subgraph") {
  CHECK(fixtures::complete(4).induced(VertexSet(4, {0, 1})) == Graph::build(2, {{0, 1}}));
  const Graph black = fixtures::pendant_path().induced(VertexSet(5, {0, 3, 4}));
  CHECK(black.order() == 3);
  CHECK(black.size() == 0);
  CHECK(fixtures::cycle(5).induced(VertexSet(5)).order() == 0);
  // relabeling preserves ascending order: {1,3,4} of P5 keeps only 3-4 -> 1-2
  CHECK(fixtures::path(5).induced(VertexSet(5, {1, 3, 4})) == Graph::build(3, {{1, 2}}));
}

TEST_CASE("is_edge_triangular") {
  for (std::size_t n = 3; n <= 7; ++n) CHECK(is_edge_triangular(fixtures::complete(n)));
  CHECK_FALSE(is_edge_triangular(fixtures::path(3)));
  CHECK_FALSE(is_edge_triangular(fixtures::pendant_path()));
}

TEST_CASE("generate_family") {
  CHECK(fixtures::path(5).size() == 4);
  CHECK(fixtures::kbip(2, 3).size() == 6);

  const auto grn = generate_family({Family::g_rn, {3, 7}});
  CHECK(grn.graph.order() == 7);
  CHECK(grn.graph.size() == 7);
  CHECK(grn.labels == std::vector<std::string>{"u1", "u2", "u3", "v1", "v2", "v3", "w"});
  CHECK(grn.graph.has_edge(3, 6));  // w v_1

  // G'_{4,7}: K_4, pendant v_1, v_2 on u_1, u_2, hub v_3 on u_3, u_4, edge v_1v_2
  const auto gp = generate_family({Family::gprime_rn, {4, 7}});
  CHECK(gp.graph == Graph::build(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                     {0, 4}, {1, 5}, {2, 6}, {3, 6}, {4, 5}}));

  SUBCASE("standard counts") {
    for (std::size_t n = 1; n <= 9; ++n) {
      CHECK(fixtures::path(n).size() == n - 1);
      CHECK(fixtures::complete(n).size() == n * (n - 1) / 2);
      if (n >= 3) CHECK(fixtures::cycle(n).size() == n);
      for (std::size_t t = 1; t <= 4; ++t) CHECK(fixtures::kbip(n, t).size() == n * t);
    }
  }
  SUBCASE("invalid parameters") {
    for (FamilySpec bad : {FamilySpec{Family::cycle, {2}}, FamilySpec{Family::path, {0}},
                           FamilySpec{Family::complete_bipartite, {0, 3}}, FamilySpec{Family::g_rn, {3, 8}},
                           FamilySpec{Family::g_rn, {2, 5}}, FamilySpec{Family::gprime_rn, {3, 7}},
                           FamilySpec{Family::gprime_rn, {6, 7}}, FamilySpec{Family::path, {3, 4}}}) {
      CHECK_THROWS_WITH_AS(generate_family(bad), "family parameters invalid", Error);
    }
  }
  SUBCASE("family text round trip") {
    CHECK(parse_family_spec("grn 3 7") == FamilySpec{Family::g_rn, {3, 7}});
    CHECK(parse_family_spec("kbip 2 3") == FamilySpec{Family::complete_bipartite, {2, 3}});
    CHECK_FALSE(parse_family_spec("path"));
    CHECK_FALSE(parse_family_spec("torus 3 3"));
    CHECK(to_string(FamilySpec{Family::gprime_rn, {4, 7}}) == "gprime 4 7");
  }
}

TEST_CASE("graph invariants on small graphs") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for_each_labeled_graph(n, [](const Graph& g) {
      // BFS distances equal an independent Floyd-Warshall.
      const auto fw = oracle::floyd_warshall(g);
      for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v) REQUIRE(g.distance(u, v) == fw[u][v]);

      for (const Edge& e : g.edges()) REQUIRE(g.without_edge(e).with_edge(e) == g);

      for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 1) REQUIRE_FALSE(is_edge_triangular(g));
      }
    });
  }
}

TEST_CASE("BFS agrees with Floyd-Warshall on random graphs up to n=8") {
  for (std::size_t i = 0; i < 300; ++i) {
    const Graph g = random_corpus_graph(6 + i % 3, 99, i);
    const auto fw = oracle::floyd_warshall(g);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v) REQUIRE(g.distance(u, v) == fw[u][v]);
  }
}

TEST_CASE("edge-list format") {
  SUBCASE("parse with comments and blank lines") {
    const auto doc = parse_edge_list("# a comment\n\n5 4\n0 1\n1 2\n# mid\n2 3\n1 4\n");
    CHECK(doc.graph == fixtures::pendant_path());
    CHECK_FALSE(doc.metadata.family);
  }
  SUBCASE("writer sorts edges with u < v") {
    const Graph g = Graph::build(4, {{3, 2}, {1, 0}, {2, 0}});
    CHECK(format_edge_list(g) == "4 3\n0 1\n0 2\n2 3\n");
  }
  SUBCASE("metadata round trip") {
    const auto fam = generate_family({Family::g_rn, {3, 7}});
    const std::string text = format_edge_list(fam.graph, {fam.spec, fam.labels});
    const auto doc = parse_edge_list(text);
    CHECK(doc.graph == fam.graph);
    CHECK(doc.metadata.family == fam.spec);
    CHECK(doc.metadata.labels == fam.labels);
  }
  SUBCASE("errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1\n1 x\n"), doctest::Contains("line 3"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n0 5\n"), "line 2: vertex out of range", ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n1 1\n"), "line 2: self-loop", ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("# only comments\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n"), ParseError);
    try {
      parse_edge_list("2 1\n\n0 -1\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
}
