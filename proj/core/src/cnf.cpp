#include "idim/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "idim/error.hpp"

namespace idim {

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long to_long(std::string_view token, std::size_t line) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

bool CnfFormula::renumbered() const {
  for (std::size_t i = 0; i < original_var.size(); ++i) {
    if (original_var[i] != static_cast<long>(i + 1)) return true;
  }
  return false;
}

CnfFormula parse_dimacs_cnf(std::string_view text) {
  struct RawClause {
    std::vector<long> lits;
    std::size_t line;
  };
  std::optional<std::pair<long, long>> header;
  std::vector<RawClause> raw;
  RawClause pending{{}, 0};

  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool done = false;
  while (!done && pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    const std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (nl == std::string_view::npos) done = true;

    const auto tokens = tokens_of(line);
    if (tokens.empty() || tokens[0].starts_with('c')) continue;
    if (tokens[0] == "%") break;
    if (tokens[0] == "p") {
      if (header) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != "cnf") throw ParseError(line_no, "malformed header");
      long n = -1;
      long m = -1;
      try {
        n = to_long(tokens[2], line_no);
        m = to_long(tokens[3], line_no);
      } catch (const ParseError&) {
        throw ParseError(line_no, "malformed header");
      }
      if (n < 0 || m < 0) throw ParseError(line_no, "malformed header");
      header.emplace(n, m);
      continue;
    }
    if (!header) throw ParseError(line_no, "clause before 'p cnf' header");
    for (std::string_view tok : tokens) {
      const long lit = to_long(tok, line_no);
      if (pending.lits.empty()) pending.line = line_no;
      if (lit == 0) {
        raw.push_back(std::move(pending));
        pending = RawClause{{}, 0};
        continue;
      }
      if (std::labs(lit) > header->first) throw ParseError(line_no, "variable out of range");
      pending.lits.push_back(lit);
    }
  }

  if (!header) throw ParseError(line_no, "missing 'p cnf' header");
  if (!pending.lits.empty()) throw ParseError(pending.line, "unterminated clause");
  if (static_cast<long>(raw.size()) != header->second) {
    throw ParseError(line_no, "header declares " + std::to_string(header->second) + " clauses, found " +
                            std::to_string(raw.size()));
  }

  std::map<long, std::size_t> dense;
  for (const auto& c : raw) {
    if (c.lits.size() != 3) throw ParseError(c.line, "not 3-CNF");
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (c.lits[i] == c.lits[j]) throw ParseError(c.line, "repeated literal in clause");
        if (c.lits[i] == -c.lits[j]) throw ParseError(c.line, "tautological clause");
      }
    }
    for (long lit : c.lits) dense.emplace(std::labs(lit), 0);
  }

  CnfFormula f;
  for (auto& [orig, idx] : dense) {
    f.original_var.push_back(orig);
    idx = f.original_var.size();
  }
  f.num_vars = f.original_var.size();
  for (const auto& c : raw) {
    Clause clause;
    for (std::size_t k = 0; k < 3; ++k) clause[k] = Literal{dense.at(std::labs(c.lits[k])), c.lits[k] > 0};
    f.clauses.push_back(clause);
  }
  return f;
}

CnfFormula read_dimacs_cnf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dimacs_cnf(buf.str());
}

std::string format_dimacs_cnf(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c) out << (l.positive ? "" : "-") << l.var << ' ';
    out << "0\n";
  }
  return out.str();
}

bool evaluate(const Literal& lit, const Assignment& t) {
  if (lit.var == 0 || lit.var > t.size()) throw Error("assignment does not cover variable " + std::to_string(lit.var));
  return t[lit.var - 1] == lit.positive;
}

std::optional<std::size_t> first_unsatisfied_clause(const CnfFormula& f, const Assignment& t) {
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& c = f.clauses[j];
    if (!std::any_of(c.begin(), c.end(), [&](const Literal& l) { return evaluate(l, t); })) return j;
  }
  return std::nullopt;
}

}  // namespace idim
