#include "doctest.h"
#include "fixtures.hpp"
#include "idim/corpus.hpp"
#include "idim/error.hpp"
#include "idim/incidence.hpp"
#include "oracles.hpp"

using namespace idim;
using namespace idim::fixtures;

TEST_CASE("resolves") {
  const Graph p3 = path(3);
  CHECK(resolves(p3, 0, {0, 1}, {1, 2}));
  CHECK_FALSE(resolves(p3, 1, {0, 1}, {1, 2}));
  CHECK(resolves(p3, 2, {0, 1}, {1, 2}));
  CHECK_FALSE(resolves(fixtures::cycle(4), 0, {0, 1}, {0, 3}));
  CHECK_THROWS_WITH_AS(resolves(p3, 0, {0, 1}, {0, 1}), "identical edges", Error);
  CHECK_THROWS_WITH_AS(resolves(p3, 0, {0, 1}, {0, 2}), "edge not in graph", Error);
}

TEST_CASE("is_incidence_generator") {
  CHECK(is_incidence_generator(path(3), VertexSet(3, {0})));
  CHECK_FALSE(is_incidence_generator(path(3), VertexSet(3)));
  CHECK_FALSE(is_incidence_generator(path(3), VertexSet(3, {1})));
  CHECK_FALSE(is_incidence_generator(cycle(4), VertexSet(4, {0})));
  CHECK(is_incidence_generator(Graph::build(2, {{0, 1}}), VertexSet(2)));
  CHECK(is_incidence_generator(pendant_path(), VertexSet(5, {2, 3, 4})));
}

TEST_CASE("generator test matches the literal definition (exhaustive n<=5)") {
  for (std::size_t n = 1; n <= 5; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
        REQUIRE(is_incidence_generator(g, oracle::to_set(n, s)) == oracle::literal_incidence_generator(g, s));
    });
}

TEST_CASE("dim_i_brute") {
  CHECK(dim_i_brute(pendant_path()).value == 3);
  CHECK(dim_i_brute(cycle(4)).value == 2);
  CHECK(dim_i_brute(cycle(7)).value == 4);
  CHECK(dim_i_brute(Graph::build(2, {{0, 1}})).value == 0);
  CHECK(dim_i_brute(Graph::build(3, std::span<const Edge>{})).value == 0);
  CHECK(dim_i_brute(path(3)).basis == VertexSet(3, {0}));
  for (bool sandwich : {true, false}) {
    const auto r = dim_i_brute(spine_tree(), {.use_sandwich = sandwich});
    CHECK(r.value == 9);
    CHECK(is_incidence_generator(spine_tree(), r.basis));
  }
}

TEST_CASE("dim_i_structural") {
  SUBCASE("pendant path") {
    const auto r = dim_i_structural(pendant_path());
    CHECK(r.value == 3);
    CHECK(r.basis == VertexSet(5, {2, 3, 4}));
    CHECK(r.achieving_edge == Edge{0, 1});
  }
  SUBCASE("spine tree") { CHECK(dim_i_structural(spine_tree()).value == 9); }
  SUBCASE("canonical basis equals the brute-force basis") {
    for (const Graph& g : {pendant_path(), cycle(7), kbip(2, 3), path(6)})
      CHECK(dim_i_structural(g, true).basis == dim_i_brute(g).basis);
  }
  CHECK_THROWS_WITH_AS(dim_i_structural(Graph::build(3, std::span<const Edge>{})),
                       "structural method requires an edge", Error);
}

TEST_CASE("dim_i_formula") {
  CHECK(dim_i_formula({Family::complete, {5}}) == 4);
  CHECK(dim_i_formula({Family::path, {7}}) == 4);
  CHECK(dim_i_formula({Family::cycle, {7}}) == 4);
  CHECK(dim_i_formula({Family::complete_bipartite, {3, 4}}) == 5);
  CHECK_THROWS_WITH_AS(dim_i_formula({Family::path, {2}}), "formula domain violated", Error);
  CHECK_THROWS_WITH_AS(dim_i_formula({Family::complete, {2}}), "formula domain violated", Error);
  CHECK_THROWS_WITH_AS(dim_i_formula({Family::cycle, {3}}), "formula domain violated", Error);
  CHECK_THROWS_WITH_AS(dim_i_formula({Family::g_rn, {3, 7}}), "formula domain violated", Error);
}

TEST_CASE("closed formulas agree with both solvers") {
  for (std::size_t n = 3; n <= 12; ++n) {
    const std::pair<Family, std::size_t> cases[] = {
        {Family::complete, 3}, {Family::path, 3}, {Family::cycle, 4}};
    for (auto [fam, lo] : cases) {
      if (n < lo) continue;
      const FamilySpec spec{fam, {n}};
      const Graph g = generate_family(spec).graph;
      const std::size_t expect = dim_i_formula(spec);
      CHECK(dim_i_structural(g).value == expect);
      if (n <= 10) CHECK(dim_i_brute(g).value == expect);
    }
  }
  for (std::size_t r = 1; r <= 4; ++r)
    for (std::size_t t = r; t <= 5; ++t) {
      const FamilySpec spec{Family::complete_bipartite, {r, t}};
      const Graph g = generate_family(spec).graph;
      CHECK(dim_i_structural(g).value == dim_i_formula(spec));
      CHECK(dim_i_brute(g).value == dim_i_formula(spec));
    }
}

TEST_CASE("solvers agree with subset enumeration (exhaustive n<=6)") {
  for (std::size_t n = 1; n <= 6; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      const std::size_t expect = oracle::dim_i(g);
      const auto brute = dim_i_brute(g);
      const auto plain = dim_i_brute(g, {.use_sandwich = false});
      REQUIRE(brute.value == expect);
      REQUIRE(plain.value == expect);
      REQUIRE(brute.basis == plain.basis);
      REQUIRE(is_incidence_generator(g, brute.basis));
      if (g.size() > 0) {
        const auto s = dim_i_structural(g);
        REQUIRE(s.value == expect);
        REQUIRE(is_incidence_generator(g, s.basis));
        REQUIRE(dim_i_structural(g, true).basis == brute.basis);
      }
    });
}

TEST_CASE("first_generator_of_size") {
  CHECK(first_generator_of_size(pendant_path(), 2) == std::nullopt);
  CHECK(first_generator_of_size(pendant_path(), 3) == VertexSet(5, {0, 1, 2}));
  CHECK(first_generator_of_size(path(3), 9) == std::nullopt);
}

TEST_CASE("classify and the symmetric-difference condition") {
  CHECK(classify(pendant_path()) == DimClass::exact);
  CHECK(classify(complete(5)) == DimClass::exact);
  CHECK(classify(path(3)) == DimClass::minus_one);
  CHECK(classify(cycle(4)) == DimClass::minus_one);
  CHECK(to_string(DimClass::minus_one) == "CLASS_MINUS_ONE");
  CHECK(to_string(DimClass::exact) == "CLASS_EXACT");

  const auto rep = check_symdiff_condition(path(3));
  CHECK(rep.cls == DimClass::minus_one);
  CHECK(rep.max_packings == 3);
  REQUIRE(rep.witness_pair);
  CHECK(rep.witness_pair->first == VertexSet(3, {0}));
  CHECK(rep.witness_pair->second == VertexSet(3, {1}));

  CHECK_FALSE(check_symdiff_condition(path(7)).witness_pair);
  CHECK_THROWS_AS(check_symdiff_condition(cycle(7), 3), WitnessCapExceeded);
}

TEST_CASE("common-neighbor characterization") {
  CHECK(common_neighbor_characterization(complete(4)));
  CHECK_FALSE(common_neighbor_characterization(path(4)));
  CHECK(common_neighbor_characterization(cycle(3)));
  CHECK_THROWS_AS(common_neighbor_characterization(Graph::build(2, {{0, 1}})), Error);
  CHECK_THROWS_AS(common_neighbor_characterization(Graph::build(4, {{0, 1}, {2, 3}})), Error);
}

TEST_CASE("named family values") {
  CHECK(dim_i_brute(complete(4)).value == 3);
  CHECK(dim_i_brute(path(7)).value == 4);
  CHECK(dim_i_brute(cycle(5)).value == 3);
  CHECK(dim_i_brute(kbip(2, 3)).value == 3);
  CHECK(dim_i_formula({Family::complete, {10}}) == 9);
  CHECK(dim_i_formula({Family::path, {8}}) == 4);
  CHECK(dim_i_formula({Family::complete_bipartite, {1, 1}}) == 0);
  CHECK_FALSE(is_incidence_generator(pendant_path(), VertexSet(5, {1, 2})));

  const auto c6 = dim_i_structural(cycle(6));
  CHECK(c6.value == 4);
  const Graph c6g = cycle(6);
  for (const Edge& e : c6g.edges()) CHECK(e_critical_packing(c6g, e).size == 2);
  const auto c7 = dim_i_structural(cycle(7));
  CHECK(c7.value == 4);
  CHECK(7 - c7.value == 3);
  const auto k23 = dim_i_structural(kbip(2, 3));
  CHECK(k23.value == 3);
  const Graph k23g = kbip(2, 3);
  for (const Edge& e : k23g.edges()) CHECK(e_critical_packing(k23g, e).witness == VertexSet(5, {e.u, e.v}));
}

TEST_CASE("classes of cycles and the spine tree") {
  CHECK(classify(cycle(7)) == DimClass::minus_one);
  CHECK(classify(cycle(6)) == DimClass::exact);
  CHECK(check_symdiff_condition(cycle(7)).witness_pair);

  const auto spine = check_symdiff_condition(spine_tree());
  CHECK(spine.cls == DimClass::exact);
  CHECK(spine.witness_pair);
}

TEST_CASE("complement of a packing generates on edge-triangular graphs") {
  for (const Graph& g : {complete(5), kbip(1, 1), Graph::build(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}})}) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
      const VertexSet p = oracle::to_set(g.order(), m);
      if (is_packing(g, p)) CHECK(is_incidence_generator(g, p.complement()));
    }
  }
}

TEST_CASE("listed graphs attain the lower bound floor(n/2)") {
  for (const Graph& g : {path(3), path(4), path(5), path(6), path(8), cycle(4), star(3)})
    CHECK(dim_i_structural(g).value == g.order() / 2);
  CHECK_FALSE(common_neighbor_characterization(cycle(4)));
  CHECK(dim_i_brute(cycle(4)).value < 3);
}
