#include "idim/sat_reduction.hpp"

#include <array>

#include "idim/error.hpp"
#include "idim/incidence.hpp"

namespace idim {

namespace {

constexpr std::size_t kTruthSize = 6;
constexpr std::size_t kClauseSize = 9;

}  // namespace

Vertex ReductionOutput::var_vertex(std::size_t i, std::size_t slot) const {
  if (i < 1 || i > num_vars()) throw Error("variable index out of range");
  return static_cast<Vertex>(kTruthSize * (i - 1) + slot);
}

Vertex ReductionOutput::clause_vertex(std::size_t j, std::size_t k, std::size_t slot) const {
  if (j < 1 || j > num_clauses() || k < 1 || k > 3) throw Error("clause index out of range");
  return static_cast<Vertex>(kTruthSize * num_vars() + kClauseSize * (j - 1) + 3 * (k - 1) + slot);
}

VertexSet ReductionOutput::truth_gadget(std::size_t i) const {
  VertexSet s = graph.empty_set();
  for (std::size_t slot = 0; slot < kTruthSize; ++slot) s.insert(var_vertex(i, slot));
  return s;
}

VertexSet ReductionOutput::clause_gadget(std::size_t j) const {
  VertexSet s = graph.empty_set();
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t slot = 0; slot < 3; ++slot) s.insert(clause_vertex(j, k, slot));
  }
  return s;
}

std::vector<std::string> ReductionOutput::vertex_names() const {
  std::vector<std::string> names(graph.order());
  for (const auto& [name, v] : labels) names[v] = name;
  return names;
}

ReductionOutput build_reduction(const CnfFormula& f) {
  ReductionOutput red;
  red.formula = f;
  const std::size_t n = f.num_vars;
  const std::size_t m = f.clauses.size();
  red.threshold = 4 * n + 8 * m;

  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::string s = "_" + std::to_string(i);
    red.labels["x" + s] = red.x(i);
    red.labels["y" + s] = red.y(i);
    red.labels["z" + s] = red.z(i);
    red.labels["w" + s] = red.w(i);
    red.labels["T" + s] = red.true_port(i);
    red.labels["F" + s] = red.false_port(i);
    for (auto [p, q] : std::array<std::pair<Vertex, Vertex>, 8>{{
             {red.x(i), red.y(i)},
             {red.x(i), red.z(i)},
             {red.y(i), red.z(i)},
             {red.y(i), red.w(i)},
             {red.z(i), red.w(i)},
             {red.w(i), red.true_port(i)},
             {red.w(i), red.false_port(i)},
             {red.true_port(i), red.false_port(i)},
         }}) {
      edges.push_back(make_edge(p, q));
    }
  }

  for (std::size_t j = 1; j <= m; ++j) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const std::string s = "_" + std::to_string(j) + "^" + std::to_string(k);
      red.labels["a" + s] = red.a(j, k);
      red.labels["b" + s] = red.b(j, k);
      red.labels["c" + s] = red.c(j, k);
      // Triangle a^k b^k c^k.
      edges.push_back(make_edge(red.a(j, k), red.b(j, k)));
      edges.push_back(make_edge(red.a(j, k), red.c(j, k)));
      edges.push_back(make_edge(red.b(j, k), red.c(j, k)));
    }
    // Triangles a^1a^2a^3, b^1b^2b^3, c^1c^2c^3.
    for (auto [k, l] : std::array<std::pair<std::size_t, std::size_t>, 3>{{{1, 2}, {2, 3}, {3, 1}}}) {
      edges.push_back(make_edge(red.a(j, k), red.a(j, l)));
      edges.push_back(make_edge(red.b(j, k), red.b(j, l)));
      edges.push_back(make_edge(red.c(j, k), red.c(j, l)));
    }
    // A positive literal of u_i links F_i, a negative one T_i.
    for (std::size_t k = 1; k <= 3; ++k) {
      const Literal& lit = f.clauses[j - 1][k - 1];
      const Vertex port = lit.positive ? red.false_port(lit.var) : red.true_port(lit.var);
      for (Vertex target : {red.b(j, k), red.c(j, k)}) {
        const Edge e = make_edge(port, target);
        edges.push_back(e);
        red.communication_edges.push_back(e);
      }
    }
  }

  red.graph = Graph::build(kTruthSize * n + kClauseSize * m, edges);
  return red;
}

VertexSet assignment_to_generator(const ReductionOutput& red, const Assignment& t) {
  const CnfFormula& f = red.formula;
  if (t.size() != f.num_vars) throw Error("assignment has wrong number of variables");
  if (auto bad = first_unsatisfied_clause(f, t)) {
    throw Error("assignment not satisfying: clause " + std::to_string(*bad + 1));
  }

  VertexSet s = red.graph.empty_set();
  for (std::size_t j = 1; j <= f.clauses.size(); ++j) {
    std::size_t chosen = 0;
    for (std::size_t k = 1; k <= 3 && chosen == 0; ++k) {
      if (evaluate(f.clauses[j - 1][k - 1], t)) chosen = k;
    }
    for (std::size_t k = 1; k <= 3; ++k) {
      s.insert(red.b(j, k));
      s.insert(red.c(j, k));
      if (k != chosen) s.insert(red.a(j, k));
    }
  }
  for (std::size_t i = 1; i <= f.num_vars; ++i) {
    s.insert(red.y(i));
    s.insert(red.z(i));
    s.insert(red.w(i));
    s.insert(t[i - 1] ? red.false_port(i) : red.true_port(i));
  }
  return s;
}

Assignment basis_to_assignment(const ReductionOutput& red, const VertexSet& s) {
  if (s.universe() != red.graph.order()) throw Error("vertex set universes differ");
  if (s.count() != red.threshold) throw Error("not a tight basis");
  if (!is_incidence_generator(red.graph, s)) throw Error("not an incidence generator");

  Assignment t(red.num_vars());
  for (std::size_t i = 1; i <= red.num_vars(); ++i) t[i - 1] = !s.contains(red.true_port(i));
  if (auto bad = first_unsatisfied_clause(red.formula, t)) {
    throw Error("extraction failed: clause " + std::to_string(*bad + 1));
  }
  return t;
}

ClaimReport verify_claims(const ReductionOutput& red, const VertexSet& s) {
  if (s.universe() != red.graph.order() || !is_incidence_generator(red.graph, s)) {
    throw Error("not an incidence generator");
  }
  ClaimReport report;
  for (std::size_t i = 1; i <= red.num_vars(); ++i) {
    const std::size_t count = (s & red.truth_gadget(i)).count();
    report.truth_counts.push_back(count);
    if (count < 4) report.truth_bound = false;
    if (count == 4 &&
        !(s.contains(red.y(i)) && s.contains(red.z(i)) && s.contains(red.w(i)) && !s.contains(red.x(i)))) {
      report.tight_truth_shape = false;
    }
  }
  for (std::size_t j = 1; j <= red.num_clauses(); ++j) {
    const std::size_t count = (s & red.clause_gadget(j)).count();
    report.clause_counts.push_back(count);
    if (count < 8) report.clause_bound = false;
  }
  report.tight = s.count() == red.threshold;
  return report;
}

}  // namespace idim
