#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "idim/cnf.hpp"
#include "idim/graph.hpp"

namespace idim {

/// An IDIM instance built from a 3-CNF formula with n variables and m clauses.
///
/// Vertex layout: variable i (1-based) owns the block 6(i-1) .. 6(i-1)+5 in
/// the order x, y, z, w, T, F. Clause j (1-based) owns the block
/// 6n + 9(j-1) .. +8 in the order a^1, b^1, c^1, a^2, b^2, c^2, a^3, b^3, c^3.
struct ReductionOutput {
  CnfFormula formula;
  Graph graph;
  /// r = 4n + 8m.
  std::size_t threshold = 0;
  /// "x_1", "T_2", "a_1^3", ... -> vertex index.
  std::map<std::string, Vertex> labels;
  /// The 6m edges joining literal occurrences to the T/F ports.
  std::vector<Edge> communication_edges;

  std::size_t num_vars() const { return formula.num_vars; }
  std::size_t num_clauses() const { return formula.clauses.size(); }

  Vertex x(std::size_t i) const { return var_vertex(i, 0); }
  Vertex y(std::size_t i) const { return var_vertex(i, 1); }
  Vertex z(std::size_t i) const { return var_vertex(i, 2); }
  Vertex w(std::size_t i) const { return var_vertex(i, 3); }
  Vertex true_port(std::size_t i) const { return var_vertex(i, 4); }
  Vertex false_port(std::size_t i) const { return var_vertex(i, 5); }
  Vertex a(std::size_t j, std::size_t k) const { return clause_vertex(j, k, 0); }
  Vertex b(std::size_t j, std::size_t k) const { return clause_vertex(j, k, 1); }
  Vertex c(std::size_t j, std::size_t k) const { return clause_vertex(j, k, 2); }

  /// Vertices of the truth-setting gadget of variable i.
  VertexSet truth_gadget(std::size_t i) const;
  /// Vertices of the satisfaction-testing gadget of clause j.
  VertexSet clause_gadget(std::size_t j) const;

  /// names[v] is the label of vertex v.
  std::vector<std::string> vertex_names() const;

 private:
  Vertex var_vertex(std::size_t i, std::size_t slot) const;
  Vertex clause_vertex(std::size_t j, std::size_t k, std::size_t slot) const;
};

ReductionOutput build_reduction(const CnfFormula& f);

/// The size-r generator induced by a satisfying assignment. Per clause the
/// smallest satisfied literal index k keeps a^k out of the set.
/// Throws Error("assignment not satisfying: clause j") (j 1-based).
VertexSet assignment_to_generator(const ReductionOutput& red, const Assignment& t);

/// Reads a truth assignment off a tight generator: u_i is TRUE iff T_i ∉ s.
/// Throws Error("not a tight basis") when |s| != r, Error("not an incidence
/// generator") when s fails the generator test, and Error("extraction failed:
/// clause j") if the extracted assignment falsifies a clause.
Assignment basis_to_assignment(const ReductionOutput& red, const VertexSet& s);

struct ClaimReport {
  /// |s ∩ truth gadget i| for each variable, in order.
  std::vector<std::size_t> truth_counts;
  /// |s ∩ clause gadget j| for each clause, in order.
  std::vector<std::size_t> clause_counts;
  /// Every truth gadget contributes >= 4.
  bool truth_bound = true;
  /// Every satisfaction gadget contributes >= 8.
  bool clause_bound = true;
  /// Every truth gadget with exactly 4 members has y, z, w in s and x outside.
  bool tight_truth_shape = true;
  bool tight = false;  // |s| == r
};

/// Throws Error("not an incidence generator") when s is not a generator.
ClaimReport verify_claims(const ReductionOutput& red, const VertexSet& s);

}  // namespace idim
