#include "idim/verify.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <sstream>

#include "combinations.hpp"
#include "idim/metric_dims.hpp"

namespace idim {

namespace {

enum Invariant : std::size_t {
  kNMinusK,
  kRhoSandwich,
  kBoundECritical,
  kPackingComplement,
  kPackingIndependent,
  kEdgeTriangular,
  kOneUncoveredEdge,
  kIncidenceVsMetric,
  kIncidenceVsMetricK2Free,
  kOrderBounds,
  kCommonNeighbor,
  kSymdiffCondition,
  kTreeUniquePacking,
};

const std::vector<std::string> kNames = {
    "n_minus_k_equivalence",
    "rho_sandwich",
    "bound_e_critical",
    "packing_complement_generator",
    "packing_is_independent",
    "edge_triangular",
    "at_most_one_uncovered_edge",
    "incidence_vs_metric",
    "incidence_vs_metric_k2_free",
    "order_bounds",
    "common_neighbor_characterization",
    "symdiff_condition",
    "tree_unique_packing",
};

using Failure = std::optional<std::string>;

std::string str(std::size_t x) { return std::to_string(x); }

bool is_independent(const Graph& g, const VertexSet& s) {
  return std::none_of(s.begin(), s.end(), [&](Vertex v) { return g.neighbors(v).intersects(s); });
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return s.contains(e.u) || s.contains(e.v); });
}

std::size_t uncovered_edges(const Graph& g, const VertexSet& s) {
  return static_cast<std::size_t>(std::count_if(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return !s.contains(e.u) && !s.contains(e.v);
  }));
}

bool on_triangle(const Graph& g, const Edge& e) { return g.neighbors(e.u).intersects(g.neighbors(e.v)); }

// Some edge uv with deg(u) = deg(v) = 1.
bool has_k2_component(const Graph& g) {
  return std::any_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return g.degree(e.u) == 1 && g.degree(e.v) == 1; });
}

bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

// Every 2-packing of g (independent sets of the square graph), by DFS.
void for_each_packing(const Graph& g, const std::function<void(const VertexSet&)>& visit) {
  VertexSet current = g.empty_set();
  std::function<void(VertexSet)> rec = [&](VertexSet cand) {
    visit(current);
    while (!cand.empty()) {
      const Vertex v = cand.front();
      cand.erase(v);
      current.insert(v);
      rec(cand - g.ball2(v));
      current.erase(v);
    }
  };
  rec(g.vertices());
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(invariants.begin(), invariants.end(), [](const auto& i) { return i.passed(); });
}

const InvariantOutcome* VerifyReport::find(const std::string& name) const {
  for (const auto& i : invariants) {
    if (i.name == name) return &i;
  }
  return nullptr;
}

SolverSet SolverSet::defaults() {
  SolverSet s;
  s.brute = [](const Graph& g) { return dim_i_brute(g, BruteOptions{.use_sandwich = false}); };
  s.structural = [](const Graph& g) { return dim_i_structural(g); };
  s.packing = [](const Graph& g) { return max_packing(g); };
  s.critical = [](const Graph& g, const Edge& e) { return e_critical_packing(g, e); };
  return s;
}

const std::vector<std::string>& Verifier::invariant_names() { return kNames; }

Verifier::Verifier(VerifyOptions options) : options_(std::move(options)) {
  for (const auto& name : kNames) {
    InvariantOutcome outcome;
    outcome.name = name;
    report_.invariants.push_back(std::move(outcome));
  }
  report_.invariants[kIncidenceVsMetric].note = "single-edge graphs have dim_I = 0 < 1 = dim_e";
  report_.invariants[kIncidenceVsMetricK2Free].note = "restricted to graphs without a K_2 component";
  if (!options_.metric) {
    report_.invariants[kIncidenceVsMetric].note = "disabled";
    report_.invariants[kIncidenceVsMetricK2Free].note = "disabled";
  }
}

void Verifier::check(const Graph& g) {
  ++report_.graphs;
  const std::size_t n = g.order();
  const std::size_t m = g.size();
  const SolverSet& solvers = options_.solvers;

  auto run = [&](std::size_t index, const std::function<Failure()>& body) {
    InvariantOutcome& out = slot(index);
    ++out.checked;
    Failure failure;
    try {
      failure = body();
    } catch (const std::exception& ex) {
      failure = std::string("exception: ") + ex.what();
    }
    if (failure) {
      if (out.failed++ == 0) out.counterexample = g.describe() + "; " + *failure;
    }
  };

  // Shared per-graph results. A solver that throws here fails the n - k check.
  PackingResult packing;
  DimResult brute;
  std::optional<DimResult> structural;
  try {
    packing = solvers.packing(g);
    brute = solvers.brute(g);
    if (m >= 1) structural = solvers.structural(g);
  } catch (const std::exception& ex) {
    run(kNMinusK, [&]() -> Failure { return std::string("solver threw: ") + ex.what(); });
    return;
  }
  const std::size_t rho = packing.size;
  const std::size_t dim = brute.value;

  if (m >= 1) {
    run(kNMinusK, [&]() -> Failure {
      if (structural->value != dim) {
        return "brute=" + str(dim) + " structural=" + str(structural->value) + " via edge " +
               (structural->achieving_edge ? to_string(*structural->achieving_edge) : "-");
      }
      if (structural->basis.count() != structural->value || !is_incidence_generator(g, structural->basis)) {
        return "structural basis " + structural->basis.to_string() + " is not a generator of size " +
               str(structural->value);
      }
      if (brute.basis.count() != dim || !is_incidence_generator(g, brute.basis)) {
        return "brute basis " + brute.basis.to_string() + " is not a generator of size " + str(dim);
      }
      return std::nullopt;
    });
  }

  run(kRhoSandwich, [&]() -> Failure {
    if (dim + rho + 1 < n || dim + rho > n) {
      return "dim_I=" + str(dim) + " rho=" + str(rho) + " outside [n-rho-1, n-rho]";
    }
    return std::nullopt;
  });

  if (m >= 1) {
    run(kBoundECritical, [&]() -> Failure {
      for (const Edge& e : g.edges()) {
        const auto crit = solvers.critical(g, e);
        const std::string where = "edge " + to_string(e) + " P_e=" + crit.witness.to_string();
        if (crit.size < rho || crit.size > rho + 1) {
          return where + " |P_e|=" + str(crit.size) + " outside [rho, rho+1], rho=" + str(rho);
        }
        const Graph minus = g.without_edge(e);
        if (!is_packing(minus, crit.witness) || crit.witness.count() != crit.size) {
          return where + " is not a packing of G-e of the reported size";
        }
        const std::size_t rho_minus = max_packing(minus).size;
        if (crit.size > rho_minus) return where + " exceeds rho(G-e)=" + str(rho_minus);
        const bool has_u = crit.witness.contains(e.u);
        const bool has_v = crit.witness.contains(e.v);
        if (!(has_u && has_v) && !is_packing(g, crit.witness)) return where + " violates condition (1)";
        if (has_u != has_v) {
          const Vertex in = has_u ? e.u : e.v;
          const Vertex out = has_u ? e.v : e.u;
          if ((g.neighbors(out) & crit.witness) != VertexSet(n, {in})) {
            return where + " N(" + str(out) + ") meets P_e beyond " + str(in);
          }
        }
      }
      return std::nullopt;
    });
  }

  run(kPackingComplement, [&]() -> Failure {
    Failure bad;
    auto test = [&](const VertexSet& x) {
      if (bad) return;
      const VertexSet s = x.complement();
      if (!is_vertex_cover(g, s)) bad = "complement of packing " + x.to_string() + " is not a vertex cover";
      else if (!is_incidence_generator(g, s)) bad = "complement of packing " + x.to_string() + " is not a generator";
    };
    if (n <= options_.all_packings_max_order) {
      for_each_packing(g, test);
    } else {
      test(packing.witness);
    }
    return bad;
  });

  run(kPackingIndependent, [&]() -> Failure {
    if (!is_packing(g, packing.witness) || packing.witness.count() != rho) {
      return "max packing witness " + packing.witness.to_string() + " invalid";
    }
    if (!is_independent(g, packing.witness)) return "max packing " + packing.witness.to_string() + " not independent";
    return std::nullopt;
  });

  if (m >= 1) {
    run(kEdgeTriangular, [&]() -> Failure {
      if (is_edge_triangular(g)) {
        for (const VertexSet* basis : {&brute.basis, &structural->basis}) {
          if (uncovered_edges(g, *basis) != 0) return "generator " + basis->to_string() + " misses an edge entirely";
        }
        if (dim + rho != n) return "edge-triangular but dim_I=" + str(dim) + " != n-rho=" + str(n - rho);
        Failure bad;
        detail::for_each_combination(n, dim, [&](const std::vector<std::size_t>& idx) {
          VertexSet s(n);
          for (std::size_t v : idx) s.insert(static_cast<Vertex>(v));
          if (is_incidence_generator(g, s) && !is_packing(g, s.complement())) {
            bad = "generator " + s.to_string() + " has a non-packing complement";
            return true;
          }
          return false;
        });
        return bad;
      }
      for (const Edge& e : g.edges()) {
        if (on_triangle(g, e)) continue;
        VertexSet s = g.vertices();
        s.erase(e.u);
        s.erase(e.v);
        if (!is_incidence_generator(g, s)) return "V minus triangle-free edge " + to_string(e) + " is not a generator";
      }
      return std::nullopt;
    });
  }

  run(kOneUncoveredEdge, [&]() -> Failure {
    if (uncovered_edges(g, brute.basis) > 1) return "basis " + brute.basis.to_string() + " misses two edges";
    if (structural && uncovered_edges(g, structural->basis) > 1) {
      return "basis " + structural->basis.to_string() + " misses two edges";
    }
    return std::nullopt;
  });

  if (options_.metric && m >= 1 && !has_isolated_vertex(g)) {
    auto compare = [&]() -> Failure {
      const auto a = dim_a(g);
      const auto e = dim_e(g);
      if (dim < a.value || dim < e.value) {
        return "dim_I=" + str(dim) + " dim_A=" + str(a.value) + " dim_e=" + str(e.value);
      }
      if (!is_adjacency_generator(g, brute.basis)) return "basis " + brute.basis.to_string() + " is not an adjacency generator";
      if (!is_edge_metric_generator(g, brute.basis)) {
        return "basis " + brute.basis.to_string() + " is not an edge metric generator";
      }
      return std::nullopt;
    };
    if (dim == 0) {
      ++slot(kIncidenceVsMetric).noted;
    } else {
      const bool k2_free = !has_k2_component(g);
      std::optional<Failure> outcome;
      run(kIncidenceVsMetric, [&]() -> Failure {
        outcome = compare();
        return *outcome;
      });
      if (k2_free) {
        run(kIncidenceVsMetricK2Free, [&]() -> Failure { return outcome ? *outcome : compare(); });
      }
    }
  }

  if (m >= 2 && g.is_connected()) {
    run(kOrderBounds, [&]() -> Failure {
      if (dim < n / 2 || dim + 1 > n) return "dim_I=" + str(dim) + " outside [floor(n/2), n-1]";
      return std::nullopt;
    });
    run(kCommonNeighbor, [&]() -> Failure {
      const bool cn = common_neighbor_characterization(g);
      if (cn != (dim + 1 == n)) {
        return std::string("common-neighbor=") + (cn ? "true" : "false") + " but dim_I=" + str(dim);
      }
      return std::nullopt;
    });
  }

  if (dim + rho + 1 == n) {
    run(kSymdiffCondition, [&]() -> Failure {
      PackingOptions opts;
      opts.enumerate_all = true;
      const auto all = *max_packing(g, opts).all_witnesses;
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
          const VertexSet diff = all[i] ^ all[j];
          if (std::any_of(diff.begin(), diff.end(), [&](Vertex v) { return g.neighbors(v).intersects(diff); })) {
            return std::nullopt;
          }
        }
      }
      return "CLASS_MINUS_ONE but no pair of maximum packings has an edge in the symmetric difference";
    });
  }

  if (is_tree(g) && has_unique_max_packing(g)) {
    run(kTreeUniquePacking, [&]() -> Failure {
      if (dim + rho != n) return "tree with unique max packing has dim_I=" + str(dim) + " != n-rho=" + str(n - rho);
      return std::nullopt;
    });
  }
}

}  // namespace idim
