#include "idim/incidence.hpp"

#include <algorithm>
#include <stdexcept>

#include "combinations.hpp"
#include "idim/error.hpp"

namespace idim {

namespace {

// Injectivity test of e ↦ e ∩ S over a fixed edge list, reusing buffers
// across the many candidate sets of a subset search.
class GeneratorTest {
 public:
  explicit GeneratorTest(const Graph& g)
      : n_(g.order()), edges_(g.edges().begin(), g.edges().end()), member_(n_, 0), keys_(edges_.size()) {}

  void assign(const std::vector<std::size_t>& members) {
    std::fill(member_.begin(), member_.end(), 0);
    for (std::size_t v : members) member_[v] = 1;
  }

  void assign(const VertexSet& s) {
    std::fill(member_.begin(), member_.end(), 0);
    for (Vertex v : s) member_[v] = 1;
  }

  bool holds() {
    if (edges_.size() <= 1) return true;
    std::size_t uncovered = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      const std::uint64_t a = member_[e.u] ? e.u + 1 : 0;
      const std::uint64_t b = member_[e.v] ? e.v + 1 : 0;
      if (a == 0 && b == 0 && ++uncovered > 1) return false;
      keys_[i] = std::min(a, b) * (n_ + 1) + std::max(a, b);
    }
    std::sort(keys_.begin(), keys_.end());
    return std::adjacent_find(keys_.begin(), keys_.end()) == keys_.end();
  }

 private:
  std::uint64_t n_;
  std::vector<Edge> edges_;
  std::vector<char> member_;
  std::vector<std::uint64_t> keys_;
};

VertexSet set_from_indices(std::size_t n, const std::vector<std::size_t>& idx) {
  VertexSet s(n);
  for (std::size_t v : idx) s.insert(static_cast<Vertex>(v));
  return s;
}

std::optional<VertexSet> search_size(const Graph& g, GeneratorTest& test, std::size_t size) {
  std::optional<VertexSet> found;
  detail::for_each_combination(g.order(), size, [&](const std::vector<std::size_t>& idx) {
    test.assign(idx);
    if (!test.holds()) return false;
    found = set_from_indices(g.order(), idx);
    return true;
  });
  return found;
}

void require_edge(const Graph& g, const Edge& e) {
  if (e.u >= g.order() || e.v >= g.order() || e.u == e.v || !g.has_edge(e)) {
    throw Error("edge not in graph");
  }
}

}  // namespace

std::string_view to_string(DimMethod m) {
  switch (m) {
    case DimMethod::brute: return "brute";
    case DimMethod::structural: return "structural";
    case DimMethod::formula: return "formula";
  }
  return "?";
}

std::string_view to_string(DimClass c) {
  return c == DimClass::minus_one ? "CLASS_MINUS_ONE" : "CLASS_EXACT";
}

bool resolves(const Graph& g, Vertex x, const Edge& e, const Edge& f) {
  require_edge(g, e);
  require_edge(g, f);
  if (make_edge(e.u, e.v) == make_edge(f.u, f.v)) throw Error("identical edges");
  if (x >= g.order()) throw Error("vertex out of range");
  return e.has_endpoint(x) != f.has_endpoint(x);
}

bool is_incidence_generator(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw Error("vertex set universes differ");
  GeneratorTest test(g);
  test.assign(s);
  return test.holds();
}

std::optional<VertexSet> first_generator_of_size(const Graph& g, std::size_t size) {
  GeneratorTest test(g);
  return search_size(g, test, size);
}

DimResult dim_i_brute(const Graph& g, const BruteOptions& options) {
  const std::size_t n = g.order();
  DimResult result;
  result.method = DimMethod::brute;
  if (g.size() <= 1) {
    result.basis = g.empty_set();
    return result;
  }

  std::size_t lo = 0;
  std::size_t hi = n;
  if (options.use_sandwich) {
    const std::size_t rho = max_packing(g).size;
    hi = n - rho;
    lo = hi == 0 ? 0 : hi - 1;
  }
  GeneratorTest test(g);
  for (std::size_t k = lo; k <= hi; ++k) {
    if (auto basis = search_size(g, test, k)) {
      result.value = k;
      result.basis = std::move(*basis);
      return result;
    }
  }
  throw std::logic_error("no incidence generator within the searched sizes: " + g.describe());
}

DimResult dim_i_structural(const Graph& g, bool canonical) {
  if (g.size() == 0) throw Error("structural method requires an edge");
  std::optional<CriticalPackingResult> best;
  for (const Edge& e : g.edges()) {
    auto crit = e_critical_packing(g, e);
    if (!best || crit.size > best->size) best = std::move(crit);
  }

  DimResult result;
  result.method = DimMethod::structural;
  result.value = g.order() - best->size;
  result.basis = best->witness.complement();
  result.achieving_edge = best->edge;
  if (!is_incidence_generator(g, result.basis)) {
    throw std::logic_error("complement of an e-critical packing is not a generator: " + g.describe());
  }
  if (canonical) {
    auto first = first_generator_of_size(g, result.value);
    if (!first) throw std::logic_error("no generator of the structural size: " + g.describe());
    result.basis = std::move(*first);
  }
  return result;
}

std::size_t dim_i_formula(const FamilySpec& spec) {
  if (spec.params.size() != family_arity(spec.family)) throw Error("formula domain violated");
  switch (spec.family) {
    case Family::complete:
      if (spec.params[0] >= 3) return spec.params[0] - 1;
      break;
    case Family::path:
      if (spec.params[0] >= 3) return 2 * (spec.params[0] - 1) / 3;
      break;
    case Family::cycle:
      if (spec.params[0] >= 4) return 2 * spec.params[0] / 3;
      break;
    case Family::complete_bipartite:
      if (spec.params[0] >= 1 && spec.params[1] >= 1) return spec.params[0] + spec.params[1] - 2;
      break;
    default: break;
  }
  throw Error("formula domain violated");
}

DimClass classify(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t rho = max_packing(g).size;
  const std::size_t dim = g.size() == 0 ? 0 : dim_i_structural(g).value;
  if (dim + rho == n) return DimClass::exact;
  if (dim + rho + 1 == n) return DimClass::minus_one;
  throw std::logic_error("incidence dimension outside [n-rho-1, n-rho]: " + g.describe());
}

SymdiffReport check_symdiff_condition(const Graph& g, std::size_t witness_cap) {
  PackingOptions options;
  options.enumerate_all = true;
  options.witness_cap = witness_cap;
  const auto packings = std::move(*max_packing(g, options).all_witnesses);

  SymdiffReport report;
  report.cls = classify(g);
  report.max_packings = packings.size();
  for (std::size_t i = 0; i < packings.size() && !report.witness_pair; ++i) {
    for (std::size_t j = i + 1; j < packings.size(); ++j) {
      const VertexSet diff = packings[i] ^ packings[j];
      const bool has_edge = std::any_of(diff.begin(), diff.end(),
                                        [&](Vertex v) { return g.neighbors(v).intersects(diff); });
      if (has_edge) {
        report.witness_pair.emplace(packings[i], packings[j]);
        break;
      }
    }
  }
  return report;
}

bool common_neighbor_characterization(const Graph& g) {
  if (g.size() < 2 || !g.is_connected()) throw Error("characterization requires connected, >=2 edges");
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.neighbors(u).intersects(g.neighbors(v))) return false;
    }
  }
  return true;
}

}  // namespace idim
