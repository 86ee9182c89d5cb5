#include "doctest.h"
#include "idim/cnf.hpp"
#include "idim/error.hpp"
#include "oracles.hpp"

using namespace idim;

TEST_CASE("parse DIMACS") {
  const auto f = parse_dimacs_cnf("c example\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
  CHECK(f.num_vars == 3);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0][1] == Literal{2, false});
  CHECK_FALSE(f.renumbered());

  SUBCASE("clauses may span lines and end at %") {
    const auto g = parse_dimacs_cnf("p cnf 3 1\n1 -2\n 3 0\n%\n0\n");
    CHECK(g.clauses.size() == 1);
  }
  SUBCASE("unused variables are dropped and the rest renumbered") {
    const auto g = parse_dimacs_cnf("p cnf 9 1\n2 -5 9 0\n");
    CHECK(g.num_vars == 3);
    CHECK(g.original_var == std::vector<long>{2, 5, 9});
    CHECK(g.clauses[0][1] == Literal{2, false});
    CHECK(g.renumbered());
  }
  SUBCASE("format round trip") {
    CHECK(parse_dimacs_cnf(format_dimacs_cnf(f)).clauses == f.clauses);
  }
}

TEST_CASE("DIMACS errors") {
  auto fails = [](std::string_view text, std::string_view what) {
    CHECK_THROWS_WITH_AS(parse_dimacs_cnf(text), doctest::Contains(std::string(what).c_str()), ParseError);
  };
  fails("1 2 3 0\n", "clause before 'p cnf' header");
  fails("p cnf x 1\n", "malformed header");
  fails("p cnf 3 1\np cnf 3 1\n1 2 3 0\n", "duplicate header");
  fails("p cnf 3 1\n1 2 4 0\n", "variable out of range");
  fails("p cnf 3 1\n1 2 0\n", "not 3-CNF");
  fails("p cnf 4 1\n1 2 3 4 0\n", "not 3-CNF");
  fails("p cnf 3 1\n1 1 2 0\n", "repeated literal in clause");
  fails("p cnf 3 1\n1 -1 2 0\n", "tautological clause");
  fails("p cnf 3 1\n1 2 3\n", "unterminated clause");
  fails("p cnf 3 2\n1 2 3 0\n", "header declares 2 clauses, found 1");
}

TEST_CASE("evaluation") {
  const auto f = parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n");
  CHECK(satisfies(f, {true, false, false}));
  CHECK(first_unsatisfied_clause(f, {false, false, false}) == 0);
  CHECK(first_unsatisfied_clause(f, {true, true, true}) == 1);
  CHECK(evaluate({2, false}, {true, false, true}));
}

TEST_CASE("oracle DPLL agrees with truth tables") {
  const auto all = parse_dimacs_cnf(
      "p cnf 3 8\n1 2 3 0\n1 2 -3 0\n1 -2 3 0\n1 -2 -3 0\n-1 2 3 0\n-1 2 -3 0\n-1 -2 3 0\n-1 -2 -3 0\n");
  CHECK_FALSE(oracle::dpll(all));
  const auto some = parse_dimacs_cnf("p cnf 4 3\n1 2 3 0\n-1 -2 4 0\n-3 -4 2 0\n");
  const auto t = oracle::dpll(some);
  REQUIRE(t);
  CHECK(satisfies(some, *t));
}
