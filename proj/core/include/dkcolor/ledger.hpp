#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dkcolor/coloring.hpp"
#include "dkcolor/constants.hpp"
#include "dkcolor/decomposition.hpp"
#include "json.hpp"

namespace dkc {

using StepDiff = std::vector<std::pair<Vertex, Color>>;

// Per-(clique, color) count of clique members gaining a newly colored
// neighbor outside A_i u All_i u Big_i+ in one coloring step.
using StepCounts = std::map<std::pair<int, Color>, int>;

struct LedgerStep {
  std::string label;
  double budget = 0;
  StepDiff diff;
  StepCounts counts;
};

struct LedgerViolation {
  int step = 0;
  int clique = 0;
  Color color = 0;
  int count = 0;
  double budget = 0;
};

// Append-only account of color-coverage usage. The ledger is the single
// source of truth for CC semantics: stages evaluate their CC bad events from
// tentative step counts computed by the same code path.
class CCLedger {
 public:
  CCLedger(const Graph& graph, const Decomposition& decomp,
           const AnalysisConstants& k);

  // Count the diff against all tracked (still uncolored) cliques.
  StepCounts count_step(const StepDiff& diff) const;

  // Append a committed step; returns entries at or above the given budget.
  std::vector<LedgerViolation> record_step(const std::string& label,
                                           const StepDiff& diff,
                                           double budget);

  // Stop tracking a clique once it is fully colored.
  void mark_clique_colored(int clique_id);
  bool tracked(int clique_id) const { return tracked_.contains(clique_id); }
  std::vector<int> tracked_cliques() const;

  double step_budget() const;         // per-step budget at current delta
  double strong_step_budget() const;  // doubled for strong-CC steps

  const std::vector<LedgerStep>& steps() const { return steps_; }

  // Members of A_i with a colored-x neighbor outside A_i u All_i (Big_i+
  // included), computed from scratch against the given coloring.
  int cumulative_cc(const PartialColoring& coloring, int clique_id,
                    Color x) const;
  int max_cumulative_cc(const PartialColoring& coloring, int clique_id) const;
  double cumulative_bound() const;  // 4*delta/5

  nlohmann::json summary_json() const;

 private:
  const Graph& graph_;
  const Decomposition& decomp_;
  const AnalysisConstants& k_;
  std::set<int> tracked_;
  std::vector<LedgerStep> steps_;
};

}  // namespace dkc
