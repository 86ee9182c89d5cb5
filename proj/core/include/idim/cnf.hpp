#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace idim {

struct Literal {
  std::size_t var = 1;  // 1-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// t[i] is the value of variable i+1.
using Assignment = std::vector<bool>;

struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;
  /// original_var[i] is the DIMACS index of dense variable i+1.
  std::vector<long> original_var;

  bool renumbered() const;
};

/// Parses DIMACS CNF restricted to width-3 clauses over three distinct
/// variables. Variables that never occur are dropped and the rest renumbered
/// densely in ascending order (see CnfFormula::original_var).
///
/// Errors (ParseError): malformed or missing "p cnf" header, a clause of width
/// other than 3 ("not 3-CNF"), repeated literals or complementary literals in
/// one clause, variables beyond the header, clause count mismatch.
CnfFormula parse_dimacs_cnf(std::string_view text);
CnfFormula read_dimacs_cnf_file(const std::string& path);

std::string format_dimacs_cnf(const CnfFormula& f);

bool evaluate(const Literal& lit, const Assignment& t);

/// Index (0-based) of the first clause t leaves unsatisfied.
std::optional<std::size_t> first_unsatisfied_clause(const CnfFormula& f, const Assignment& t);

inline bool satisfies(const CnfFormula& f, const Assignment& t) { return !first_unsatisfied_clause(f, t); }

}  // namespace idim
