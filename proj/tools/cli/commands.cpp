#include "commands.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "idim/cnf.hpp"
#include "idim/corpus.hpp"
#include "idim/edge_list_io.hpp"
#include "idim/error.hpp"
#include "idim/incidence.hpp"
#include "idim/metric_dims.hpp"
#include "idim/packing.hpp"
#include "idim/sat_reduction.hpp"
#include "idim/verify.hpp"

namespace idim::cli {

namespace {

std::string method_name(Method m) {
  switch (m) {
    case Method::brute: return "brute";
    case Method::structural: return "structural";
    case Method::formula: return "formula";
    case Method::automatic: return "auto";
  }
  return "?";
}

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

EdgeListDocument load_graph(Report& r, const std::string& path) {
  r.inputs["graph"] = path;
  auto doc = read_edge_list_file(path);
  r.results["n"] = doc.graph.order();
  r.results["m"] = doc.graph.size();
  return doc;
}

// DIMACS-style signed literals over the original variable numbers.
Json assignment_json(const CnfFormula& f, const Assignment& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const long var = f.original_var.empty() ? static_cast<long>(i + 1) : f.original_var[i];
    out.push_back(t[i] ? var : -var);
  }
  return out;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

Json labels_json(const ReductionOutput& red) {
  Json doc;
  doc["r"] = red.threshold;
  doc["vertices"] = red.graph.order();
  doc["variables"] = red.num_vars();
  doc["clauses"] = red.num_clauses();
  if (red.formula.renumbered()) doc["original_var"] = red.formula.original_var;
  Json labels = Json::object();
  const auto names = red.vertex_names();
  for (std::size_t v = 0; v < names.size(); ++v) labels[names[v]] = v;
  doc["labels"] = std::move(labels);
  return doc;
}

void add_claims(Report& r, const ReductionOutput& red, const VertexSet& s) {
  const ClaimReport claims = verify_claims(red, s);
  r.results["truth_gadget_counts"] = claims.truth_counts;
  r.results["clause_gadget_counts"] = claims.clause_counts;
  r.check("truth_gadget_bound", claims.truth_bound);
  r.check("clause_gadget_bound", claims.clause_bound);
  r.check("tight_truth_shape", claims.tight_truth_shape);
}

}  // namespace

Report cmd_dimi(const DimiArgs& args) {
  Report r;
  r.command = "dimi";
  const auto doc = load_graph(r, args.graph_file);
  r.inputs["method"] = method_name(args.method);
  r.inputs["canonical"] = args.canonical;
  const Graph& g = doc.graph;

  if (args.method == Method::formula) {
    if (!doc.metadata.family) throw Error("formula requires a named family");
    r.results["family"] = to_string(*doc.metadata.family);
    r.results["solver"] = "formula";
    r.results["value"] = dim_i_formula(*doc.metadata.family);
    return r;
  }

  Method method = args.method;
  if (method == Method::automatic) method = g.size() == 0 ? Method::brute : Method::structural;
  DimResult d = method == Method::brute ? dim_i_brute(g) : dim_i_structural(g, args.canonical);
  r.results["solver"] = std::string(to_string(d.method));
  r.results["value"] = d.value;
  r.results["basis"] = set_json(d.basis);
  if (d.achieving_edge) r.results["achieving_edge"] = edge_json(*d.achieving_edge);
  r.check("basis_is_generator", is_incidence_generator(g, d.basis), d.basis.to_string());
  r.check("basis_size", d.basis.count() == d.value);
  return r;
}

Report cmd_rho(const RhoArgs& args) {
  Report r;
  r.command = "rho";
  const Graph g = load_graph(r, args.graph_file).graph;
  r.inputs["all"] = args.all;
  const PackingResult p = max_packing(g, PackingOptions{.enumerate_all = args.all});
  r.results["rho"] = p.size;
  r.results["witness"] = set_json(p.witness);
  if (p.all_witnesses) {
    r.results["count"] = p.all_witnesses->size();
    Json all = Json::array();
    for (const auto& w : *p.all_witnesses) all.push_back(set_json(w));
    r.results["all_witnesses"] = std::move(all);
  }
  r.check("witness_is_packing", is_packing(g, p.witness), p.witness.to_string());
  return r;
}

Report cmd_ecritical(const EcriticalArgs& args) {
  Report r;
  r.command = "ecritical";
  const Graph g = load_graph(r, args.graph_file).graph;
  r.inputs["edge"] = Json::array({args.u, args.v});
  if (args.u >= g.order() || args.v >= g.order() || args.u == args.v || !g.has_edge(args.u, args.v)) {
    throw Error("edge not in graph");
  }
  const CriticalPackingResult c = e_critical_packing(g, make_edge(args.u, args.v));
  const std::size_t rho = max_packing(g).size;
  r.results["size"] = c.size;
  r.results["witness"] = set_json(c.witness);
  r.results["is_packing_of_graph"] = c.is_packing_of_graph;
  r.results["contains_both_endpoints"] = c.contains_both_endpoints;
  r.results["rho"] = rho;
  r.check("bound_e_critical", rho <= c.size && c.size <= rho + 1,
          "rho=" + std::to_string(rho) + " |P_e|=" + std::to_string(c.size));
  return r;
}

Report cmd_dima(const GraphArgs& args) {
  Report r;
  r.command = "dima";
  const Graph g = load_graph(r, args.graph_file).graph;
  const auto d = dim_a(g);
  r.results["value"] = d.value;
  r.results["basis"] = set_json(d.basis);
  r.check("basis_is_adjacency_generator", is_adjacency_generator(g, d.basis), d.basis.to_string());
  return r;
}

Report cmd_dime(const GraphArgs& args) {
  Report r;
  r.command = "dime";
  const Graph g = load_graph(r, args.graph_file).graph;
  const auto d = dim_e(g);
  r.results["value"] = d.value;
  r.results["basis"] = set_json(d.basis);
  r.check("basis_is_edge_metric_generator", is_edge_metric_generator(g, d.basis), d.basis.to_string());
  return r;
}

Report cmd_classify(const GraphArgs& args) {
  Report r;
  r.command = "classify";
  const Graph g = load_graph(r, args.graph_file).graph;
  const std::size_t rho = max_packing(g).size;
  const std::size_t dim = g.size() == 0 ? 0 : dim_i_structural(g).value;
  r.results["rho"] = rho;
  r.results["dim_i"] = dim;
  try {
    const SymdiffReport s = check_symdiff_condition(g);
    r.results["class"] = std::string(to_string(s.cls));
    r.results["max_packings"] = s.max_packings;
    if (s.witness_pair) {
      r.results["symdiff_pair"] = Json::array({set_json(s.witness_pair->first), set_json(s.witness_pair->second)});
    }
    r.check("symdiff_condition", s.cls == DimClass::exact || s.witness_pair.has_value(),
            s.cls == DimClass::minus_one && !s.witness_pair ? "no maximum packings with an edge between them" : "");
  } catch (const WitnessCapExceeded& ex) {
    r.results["class"] = std::string(to_string(classify(g)));
    r.results["symdiff"] = std::string("skipped: ") + ex.what();
  }
  return r;
}

Report cmd_gen(const GenArgs& args) {
  Report r;
  r.command = "gen";
  r.inputs["family"] = args.family;
  r.inputs["params"] = args.params;
  const auto family = parse_family_name(args.family);
  if (!family) throw Error("unknown family '" + args.family + "'");
  if (args.params.size() != family_arity(*family)) {
    throw Error("family '" + std::string(family_name(*family)) + "' takes " + std::to_string(family_arity(*family)) +
                " parameter(s)");
  }
  const FamilyGraph fg = generate_family(FamilySpec{*family, args.params});
  write_edge_list_file(args.out, fg.graph, EdgeListMetadata{fg.spec, fg.labels});
  r.results["n"] = fg.graph.order();
  r.results["m"] = fg.graph.size();
  r.results["spec"] = to_string(fg.spec);
  r.results["out"] = args.out;
  return r;
}

Report cmd_reduce(const ReduceArgs& args) {
  Report r;
  r.command = "reduce";
  r.inputs["cnf"] = args.cnf_file;
  r.inputs["solve"] = args.solve;
  const CnfFormula f = read_dimacs_cnf_file(args.cnf_file);
  const ReductionOutput red = build_reduction(f);
  const std::size_t nv = red.num_vars();
  const std::size_t mc = red.num_clauses();
  r.results["variables"] = nv;
  r.results["clauses"] = mc;
  r.results["n"] = red.graph.order();
  r.results["m"] = red.graph.size();
  r.results["r"] = red.threshold;
  r.results["communication_edges"] = red.communication_edges.size();
  r.check("vertex_count", red.graph.order() == 6 * nv + 9 * mc);
  r.check("edge_count", red.graph.size() == 8 * nv + 24 * mc);
  r.check("edge_triangular", is_edge_triangular(red.graph));

  if (!args.out_prefix.empty()) {
    write_edge_list_file(args.out_prefix + ".edges", red.graph, EdgeListMetadata{std::nullopt, red.vertex_names()});
    write_text(args.out_prefix + ".labels.json", labels_json(red).dump(2) + "\n");
    r.results["graph_file"] = args.out_prefix + ".edges";
    r.results["labels_file"] = args.out_prefix + ".labels.json";
  }

  if (args.solve) {
    // Edge-triangular graphs satisfy dim_I = |V| - rho, and rho <= 2n + m.
    const PackingResult p = max_packing(red.graph);
    const std::size_t target = 2 * nv + mc;
    const bool satisfiable = p.size == target;
    r.results["rho"] = p.size;
    r.results["dim_i"] = red.graph.order() - p.size;
    r.results["satisfiable"] = satisfiable;
    r.check("rho_at_most_2n_plus_m", p.size <= target, "rho=" + std::to_string(p.size));
    if (satisfiable) {
      const VertexSet basis = p.witness.complement();
      const Assignment t = basis_to_assignment(red, basis);
      r.results["assignment"] = assignment_json(f, t);
      r.results["basis"] = set_json(basis);
      r.check("assignment_satisfies", satisfies(f, t));
      add_claims(r, red, basis);
      if (!args.out_prefix.empty()) {
        std::ostringstream text;
        for (Vertex v : basis) text << v << '\n';
        write_text(args.out_prefix + ".basis", text.str());
        r.results["basis_file"] = args.out_prefix + ".basis";
      }
    }
  }
  return r;
}

std::vector<std::uint32_t> parse_basis_text(std::string_view text) {
  std::vector<std::uint32_t> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t i = 0;
    while (i < line.size()) {
      const char ch = line[i];
      if (ch == ' ' || ch == '\t' || ch == '\r' || ch == ',' || ch == '[' || ch == ']') {
        ++i;
        continue;
      }
      std::uint32_t v = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
      if (ec != std::errc{}) throw ParseError(line_no, "expected vertex index");
      out.push_back(v);
      i = static_cast<std::size_t>(ptr - line.data());
    }
  }
  return out;
}

Report cmd_extract(const ExtractArgs& args) {
  Report r;
  r.command = "extract";
  r.inputs["cnf"] = args.cnf_file;
  r.inputs["basis"] = args.basis_file;
  const CnfFormula f = read_dimacs_cnf_file(args.cnf_file);
  const ReductionOutput red = build_reduction(f);
  VertexSet s(red.graph.order());
  for (std::uint32_t v : parse_basis_text(read_text(args.basis_file))) {
    if (v >= red.graph.order()) throw Error("basis vertex " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  r.results["n"] = red.graph.order();
  r.results["m"] = red.graph.size();
  r.results["r"] = red.threshold;
  r.results["basis_size"] = s.count();
  const Assignment t = basis_to_assignment(red, s);
  r.results["assignment"] = assignment_json(f, t);
  r.check("assignment_satisfies", satisfies(f, t));
  add_claims(r, red, s);
  return r;
}

Report cmd_verify(const VerifyArgs& args) {
  Report r;
  r.command = "verify";
  if (args.exhaustive.has_value() == args.random_order.has_value()) {
    throw Error("choose exactly one of --exhaustive N or --random N");
  }
  VerifyOptions options;
  options.metric = args.metric;
  Verifier verifier(options);

  if (args.exhaustive) {
    const std::size_t top = *args.exhaustive;
    r.inputs["exhaustive"] = top;
    if (top >= 8) throw Error("exhaustive enumeration is limited to n <= 7");
    if (top == 7 && !args.slow) throw Error("exhaustive n=7 (2^21 graphs) requires --slow");
    for (std::size_t n = 1; n <= top; ++n) for_each_labeled_graph(n, [&](const Graph& g) { verifier.check(g); });
  } else {
    r.inputs["random"] = *args.random_order;
    r.inputs["count"] = args.count;
    r.inputs["seed"] = args.seed;
    for (std::size_t i = 0; i < args.count; ++i) verifier.check(random_corpus_graph(*args.random_order, args.seed, i));
  }
  r.inputs["metric"] = args.metric;

  const VerifyReport& rep = verifier.report();
  r.results["graphs"] = rep.graphs;
  Json invariants = Json::array();
  for (const InvariantOutcome& inv : rep.invariants) {
    Json row;
    row["name"] = inv.name;
    row["checked"] = inv.checked;
    row["failed"] = inv.failed;
    row["noted"] = inv.noted;
    if (!inv.note.empty()) row["note"] = inv.note;
    if (!inv.counterexample.empty()) row["counterexample"] = inv.counterexample;
    invariants.push_back(std::move(row));

    std::string detail = "checked=" + std::to_string(inv.checked);
    if (inv.failed > 0) detail += " failed=" + std::to_string(inv.failed) + " first: " + inv.counterexample;
    if (inv.noted > 0) detail += " noted=" + std::to_string(inv.noted) + " (" + inv.note + ")";
    r.check(inv.name, inv.passed(), detail);
  }
  r.details["invariants"] = std::move(invariants);
  return r;
}

}  // namespace idim::cli
