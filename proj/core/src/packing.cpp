#include "idim/packing.hpp"

#include "idim/error.hpp"
#include "packing_search.hpp"

namespace idim {

namespace {

using detail::Word;

// Admissibility for e-critical packings, tracked along the search path.
// `violated` records that the partial set is no longer a 2-packing of G; once
// set, the leaf is admissible only if it ends up holding both endpoints.
class CriticalConstraint {
 public:
  static constexpr bool kActive = true;

  CriticalConstraint(const Graph& g, Edge e)
      : words_((g.order() + 63) / 64), rows_(detail::conflict_rows(g)), e_(e) {
    violated_.push_back(false);
  }

  void push(Vertex w, const Word* chosen) {
    bool v = violated_.back();
    if (!v) {
      const Word* ball = &rows_[std::size_t{w} * words_];
      for (std::size_t i = 0; i < words_ && !v; ++i) v = (chosen[i] & ball[i]) != 0;
    }
    violated_.push_back(v);
  }

  void pop() { violated_.pop_back(); }

  bool dead(const Word* chosen, const Word* cand) const {
    if (!violated_.back()) return false;
    return !(has(chosen, e_.u) || has(cand, e_.u)) || !(has(chosen, e_.v) || has(cand, e_.v));
  }

  bool accept(const Word* chosen) const {
    return !violated_.back() || (has(chosen, e_.u) && has(chosen, e_.v));
  }

 private:
  static bool has(const Word* s, Vertex x) { return ((s[x / 64] >> (x % 64)) & 1U) != 0; }

  std::size_t words_;
  std::vector<Word> rows_;
  Edge e_;
  std::vector<bool> violated_;
};

}  // namespace

bool is_packing(const Graph& g, const VertexSet& p) {
  if (p.universe() != g.order()) throw Error("vertex set universes differ");
  for (Vertex v : p) {
    VertexSet near = g.ball2(v) & p;
    near.erase(v);
    if (!near.empty()) return false;
  }
  return true;
}

PackingResult max_packing(const Graph& g, const PackingOptions& options) {
  detail::PackingSearch<> search(g.order(), detail::conflict_rows(g));
  if (options.enumerate_all) search.enumerate_all(options.witness_cap);
  search.run();

  PackingResult result;
  result.size = static_cast<std::size_t>(search.best_size());
  result.witness = VertexSet::from_words(g.order(), search.best_witness());
  if (options.enumerate_all) {
    std::vector<VertexSet> all;
    all.reserve(search.all_witnesses().size());
    for (const auto& w : search.all_witnesses()) all.push_back(VertexSet::from_words(g.order(), w));
    result.all_witnesses = std::move(all);
  }
  return result;
}

CriticalPackingResult e_critical_packing(const Graph& g, const Edge& e) {
  const Edge edge = make_edge(e.u, e.v);
  const Graph minus = g.without_edge(edge);
  detail::PackingSearch<CriticalConstraint> search(g.order(), detail::conflict_rows(minus),
                                                   CriticalConstraint(g, edge));
  search.run();

  CriticalPackingResult result;
  result.edge = edge;
  if (search.best_size() < 0) {
    // Unreachable in practice: the empty set is a 2-packing of G.
    result.witness = g.empty_set();
  } else {
    result.size = static_cast<std::size_t>(search.best_size());
    result.witness = VertexSet::from_words(g.order(), search.best_witness());
  }
  result.contains_both_endpoints = result.witness.contains(edge.u) && result.witness.contains(edge.v);
  result.is_packing_of_graph = is_packing(g, result.witness);
  return result;
}

bool has_unique_max_packing(const Graph& g) {
  // A cap of one witness suffices: a second maximum packing overflows it.
  PackingOptions options;
  options.enumerate_all = true;
  options.witness_cap = 1;
  try {
    return max_packing(g, options).all_witnesses->size() == 1;
  } catch (const WitnessCapExceeded&) {
    return false;
  }
}

}  // namespace idim
