#pragma once

#include <map>
#include <string>
#include <vector>

#include "dkcolor/audit.hpp"
#include "dkcolor/constants.hpp"
#include "dkcolor/ledger.hpp"
#include "dkcolor/lll.hpp"
#include "dkcolor/rng.hpp"

namespace dkc {

// Everything a coloring stage needs. `order` is the vertex iteration order;
// stage outcomes must not depend on it (order-independence is a tested
// contract), so it exists purely to let tests permute it.
struct StageEnv {
  const Graph& graph;
  const Decomposition& decomp;
  const AnalysisConstants& k;
  const NodeRng& rng;
  PartialColoring& coloring;
  CCLedger& ledger;
  std::vector<Vertex> order;

  static std::vector<Vertex> identity_order(int n) {
    std::vector<Vertex> o(n);
    for (int i = 0; i < n; ++i) o[i] = i;
    return o;
  }
};

struct IterationRow {
  int iter = 0;
  int colored = 0;
  int max_uncolored_degree = 0;
  int occurred_events = 0;
  int largest_component = 0;
  int resamples = 0;
};

struct StageTrace {
  std::string stage;
  int rounds = 0;
  std::vector<IterationRow> iterations;
  std::map<std::string, int> events_by_kind;
  std::vector<int> component_sizes;
  int largest_component = 0;
  nlohmann::json extra = nlohmann::json::object();

  void absorb(const ShatterOutcome& outcome,
              const std::vector<BadEvent>& pre_events);
  nlohmann::json to_json() const;
};

// Commit a step diff: properness against committed colors, ledger append
// (the stage's CC events guarantee the budget, so a violation here is an
// invariant breach), and step bump. Recoloring is only legal for swap steps.
void commit_step(StageEnv& env, const std::string& label, const StepDiff& diff,
                 double budget, bool allow_recolor = false);

}  // namespace dkc
