#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "idim/graph.hpp"
#include "idim/incidence.hpp"
#include "idim/packing.hpp"

namespace idim {

/// Tally for one cross-checked invariant over a corpus.
struct InvariantOutcome {
  std::string name;
  /// Graphs on which the invariant's hypothesis held and it was evaluated.
  std::size_t checked = 0;
  std::size_t failed = 0;
  /// First failure in corpus order: graph plus the sets involved.
  std::string counterexample;
  /// Graphs set aside by a documented convention (e.g. single-edge graphs in
  /// the metric comparison), reported but not counted as failures.
  std::size_t noted = 0;
  std::string note;

  bool passed() const { return failed == 0; }
};

struct VerifyReport {
  std::size_t graphs = 0;
  std::vector<InvariantOutcome> invariants;

  bool passed() const;
  const InvariantOutcome* find(const std::string& name) const;
};

/// The solvers under test. Replacing one (e.g. with a deliberately broken
/// version) is how the harness itself gets tested.
struct SolverSet {
  std::function<DimResult(const Graph&)> brute;
  std::function<DimResult(const Graph&)> structural;
  std::function<PackingResult(const Graph&)> packing;
  std::function<CriticalPackingResult(const Graph&, const Edge&)> critical;

  /// brute runs without the ρ sandwich so it assumes nothing it verifies.
  static SolverSet defaults();
};

struct VerifyOptions {
  SolverSet solvers = SolverSet::defaults();
  /// Include the dim_A / dim_e comparison (the slowest check).
  bool metric = true;
  /// Enumerate every 2-packing for the complement check up to this order;
  /// larger graphs use the maximum packings only.
  std::size_t all_packings_max_order = 12;
};

/// Runs the cross-checking invariant suite graph by graph. Results depend only
/// on the sequence of graphs checked.
class Verifier {
 public:
  explicit Verifier(VerifyOptions options = {});

  void check(const Graph& g);
  const VerifyReport& report() const { return report_; }

  static const std::vector<std::string>& invariant_names();

 private:
  InvariantOutcome& slot(std::size_t index) { return report_.invariants[index]; }

  VerifyOptions options_;
  VerifyReport report_;
};

}  // namespace idim
