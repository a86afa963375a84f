#include "dkcolor/stage_env.hpp"

#include <algorithm>

namespace dkc {

void StageTrace::absorb(const ShatterOutcome& outcome,
                        const std::vector<BadEvent>& pre_events) {
  for (int id : outcome.occurred_pre) {
    auto it = std::find_if(pre_events.begin(), pre_events.end(),
                           [id](const BadEvent& e) { return e.id == id; });
    if (it != pre_events.end()) ++events_by_kind[it->kind];
  }
  for (const auto& comp : outcome.components)
    component_sizes.push_back(static_cast<int>(comp.vars.size()));
  largest_component = std::max(largest_component, outcome.largest_component);
  rounds += outcome.rounds_simulated;
}

nlohmann::json StageTrace::to_json() const {
  nlohmann::json j;
  j["stage"] = stage;
  j["rounds"] = rounds;
  j["events_by_kind"] = events_by_kind;
  j["component_sizes"] = component_sizes;
  j["largest_component"] = largest_component;
  j["iterations"] = nlohmann::json::array();
  for (const auto& row : iterations) {
    j["iterations"].push_back({{"iter", row.iter},
                               {"colored", row.colored},
                               {"max_uncolored_degree", row.max_uncolored_degree},
                               {"occurred_events", row.occurred_events},
                               {"largest_component", row.largest_component},
                               {"resamples", row.resamples}});
  }
  j["extra"] = extra;
  return j;
}

void commit_step(StageEnv& env, const std::string& label, const StepDiff& diff,
                 double budget, bool allow_recolor) {
  for (auto [v, x] : diff) {
    if (!allow_recolor && env.coloring.is_colored(v))
      throw InvariantBreach("commit_step: recoloring vertex " +
                            std::to_string(v) + " in step " + label);
  }
  auto violations = env.ledger.record_step(label, diff, budget);
  if (!violations.empty())
    throw InvariantBreach("commit_step: CC budget exceeded at commit of " +
                          label);
  for (auto [v, x] : diff) env.coloring.set(v, x);
  // Verify the new assignments are proper against the committed state.
  for (auto [v, x] : diff) {
    for (Vertex u : env.graph.neighbors(v)) {
      if (env.coloring.color(u) == x)
        throw InvariantBreach("commit_step: monochromatic edge committed in " +
                              label);
    }
  }
  env.coloring.bump_step();
}

}  // namespace dkc
