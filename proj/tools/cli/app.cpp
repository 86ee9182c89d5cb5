#include "app.hpp"

#include <chrono>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "idim/error.hpp"
#include "idim/edge_list_io.hpp"
#include "idim/families.hpp"

namespace idim::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact incidence dimension, 2-packing and 3-SAT reduction toolkit", "idim"};
  app.require_subcommand(1);

  bool json = false;
  bool canonical = false;
  bool slow = false;
  bool no_timing = false;
  std::uint64_t seed = 0;
  app.add_flag("--json", json, "Emit a JSON report");
  app.add_flag("--canonical", canonical, "Return the lexicographically smallest basis");
  app.add_option("--seed", seed, "Seed for random corpora");
  app.add_flag("--slow", slow, "Allow the 2^21-graph exhaustive corpus at n=7");
  app.add_flag("--no-timing", no_timing, "Omit elapsed time so reports are byte-identical across runs");

  std::function<Report()> action;
  std::string gen_out;
  GenArgs gen;

  DimiArgs dimi;
  std::string method = "auto";
  auto* c_dimi = app.add_subcommand("dimi", "Incidence dimension");
  c_dimi->add_option("graph", dimi.graph_file, "Edge-list file")->required();
  c_dimi->add_option("--method", method, "brute | structural | formula | auto")
      ->check(CLI::IsMember({"brute", "structural", "formula", "auto"}));
  c_dimi->callback([&] {
    dimi.canonical = canonical;
    dimi.method = method == "brute"        ? Method::brute
                  : method == "structural" ? Method::structural
                  : method == "formula"    ? Method::formula
                                           : Method::automatic;
    action = [&] { return cmd_dimi(dimi); };
  });

  RhoArgs rho;
  auto* c_rho = app.add_subcommand("rho", "Maximum 2-packing");
  c_rho->add_option("graph", rho.graph_file, "Edge-list file")->required();
  c_rho->add_flag("--all", rho.all, "Enumerate every maximum 2-packing");
  c_rho->callback([&] { action = [&] { return cmd_rho(rho); }; });

  EcriticalArgs ec;
  auto* c_ec = app.add_subcommand("ecritical", "e-critical 2-packing for edge u v");
  c_ec->add_option("graph", ec.graph_file, "Edge-list file")->required();
  c_ec->add_option("u", ec.u, "First endpoint")->required();
  c_ec->add_option("v", ec.v, "Second endpoint")->required();
  c_ec->callback([&] { action = [&] { return cmd_ecritical(ec); }; });

  GraphArgs single;
  auto graph_command = [&](const char* name, const char* about, Report (*fn)(const GraphArgs&)) {
    auto* c = app.add_subcommand(name, about);
    c->add_option("graph", single.graph_file, "Edge-list file")->required();
    c->callback([&, fn] { action = [&, fn] { return fn(single); }; });
  };
  graph_command("dima", "Adjacency dimension", cmd_dima);
  graph_command("dime", "Edge metric dimension", cmd_dime);
  graph_command("classify", "CLASS_EXACT (n - rho) or CLASS_MINUS_ONE (n - rho - 1)", cmd_classify);

  auto* c_gen = app.add_subcommand("gen", "Write a named family graph");
  c_gen->add_option("family", gen.family, "path | cycle | complete | complete_bipartite | grn | gprime")->required();
  c_gen->add_option("params", gen.params, "Family parameters")->required();
  c_gen->add_option("-o,--out", gen.out, "Output edge-list file, '-' for stdout")->default_val("-");
  c_gen->callback([&] { action = [&] { return cmd_gen(gen); }; });

  ReduceArgs reduce;
  auto* c_reduce = app.add_subcommand("reduce", "Compile a 3-CNF formula into an incidence-dimension instance");
  c_reduce->add_option("cnf", reduce.cnf_file, "DIMACS CNF file")->required();
  c_reduce->add_option("-o,--out", reduce.out_prefix, "Write PREFIX.edges and PREFIX.labels.json");
  c_reduce->add_flag("--solve", reduce.solve, "Decide satisfiability via the maximum 2-packing");
  c_reduce->callback([&] { action = [&] { return cmd_reduce(reduce); }; });

  ExtractArgs extract;
  auto* c_extract = app.add_subcommand("extract", "Read a satisfying assignment off a size-r basis");
  c_extract->add_option("cnf", extract.cnf_file, "DIMACS CNF file")->required();
  c_extract->add_option("basis", extract.basis_file, "Basis file (vertex indices)")->required();
  c_extract->callback([&] { action = [&] { return cmd_extract(extract); }; });

  VerifyArgs verify;
  bool no_metric = false;
  auto* c_verify = app.add_subcommand("verify", "Cross-check every invariant over a corpus");
  c_verify->add_option("--exhaustive", verify.exhaustive, "All labeled graphs with 1..N vertices");
  c_verify->add_option("--random", verify.random_order, "Random graphs on N vertices");
  c_verify->add_option("--count", verify.count, "Number of random graphs")->default_val(100);
  c_verify->add_flag("--no-metric", no_metric, "Skip the adjacency/edge metric comparison");
  c_verify->callback([&] {
    verify.seed = seed;
    verify.slow = slow;
    verify.metric = !no_metric;
    action = [&] { return cmd_verify(verify); };
  });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  // `gen -o -` streams the edge list itself rather than a report.
  if (c_gen->parsed() && gen.out == "-") {
    try {
      const auto family = parse_family_name(gen.family);
      if (!family) throw Error("unknown family '" + gen.family + "'");
      const FamilyGraph fg = generate_family(FamilySpec{*family, gen.params});
      write_edge_list(out, fg.graph, EdgeListMetadata{fg.spec, fg.labels});
      return kOk;
    } catch (const std::exception& ex) {
      err << "error: " << ex.what() << '\n';
      return kError;
    }
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Report report = action();
    const auto stop = std::chrono::steady_clock::now();
    if (!no_timing) report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    out << (json ? render_json(report) : render_text(report));
    return report.passed() ? kOk : kCheckFailed;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kError;
  }
}

}  // namespace idim::cli
