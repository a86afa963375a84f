#include "dkcolor/ledger.hpp"

#include <algorithm>

namespace dkc {

CCLedger::CCLedger(const Graph& graph, const Decomposition& decomp,
                   const AnalysisConstants& k)
    : graph_(graph), decomp_(decomp), k_(k) {
  for (const auto& q : decomp.cliques) tracked_.insert(q.id);
}

StepCounts CCLedger::count_step(const StepDiff& diff) const {
  // Distinct members per (clique, color); a member may see several newly
  // colored neighbors of the same color but counts once.
  std::map<std::pair<int, Color>, std::set<Vertex>> hit;
  for (auto [v, x] : diff) {
    for (Vertex a : graph_.neighbors(v)) {
      const int i = decomp_.clique_of[a];
      if (i < 0 || !tracked_.contains(i)) continue;
      if (!decomp_.cc_external(v, i)) continue;
      hit[{i, x}].insert(a);
    }
  }
  StepCounts counts;
  for (const auto& [key, members] : hit)
    counts[key] = static_cast<int>(members.size());
  return counts;
}

std::vector<LedgerViolation> CCLedger::record_step(const std::string& label,
                                                   const StepDiff& diff,
                                                   double budget) {
  LedgerStep step;
  step.label = label;
  step.budget = budget;
  step.diff = diff;
  step.counts = count_step(diff);
  std::vector<LedgerViolation> violations;
  for (const auto& [key, count] : step.counts) {
    if (count >= budget) {
      violations.push_back({static_cast<int>(steps_.size()), key.first,
                            key.second, count, budget});
    }
  }
  steps_.push_back(std::move(step));
  return violations;
}

void CCLedger::mark_clique_colored(int clique_id) {
  tracked_.erase(clique_id);
}

std::vector<int> CCLedger::tracked_cliques() const {
  return {tracked_.begin(), tracked_.end()};
}

double CCLedger::step_budget() const { return k_.cc_budget(graph_.delta()); }

double CCLedger::strong_step_budget() const {
  return k_.cc_strong_mult() * step_budget();
}

int CCLedger::cumulative_cc(const PartialColoring& coloring, int clique_id,
                            Color x) const {
  const auto& q = decomp_.cliques[clique_id];
  int count = 0;
  for (Vertex a : q.members) {
    for (Vertex v : graph_.neighbors(a)) {
      if (coloring.color(v) == x && decomp_.external(v, clique_id)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

int CCLedger::max_cumulative_cc(const PartialColoring& coloring,
                                int clique_id) const {
  const auto& q = decomp_.cliques[clique_id];
  std::map<Color, std::set<Vertex>> per_color;
  for (Vertex a : q.members) {
    for (Vertex v : graph_.neighbors(a)) {
      const Color x = coloring.color(v);
      if (x != PartialColoring::kNone && decomp_.external(v, clique_id))
        per_color[x].insert(a);
    }
  }
  int best = 0;
  for (const auto& [x, members] : per_color)
    best = std::max(best, static_cast<int>(members.size()));
  return best;
}

double CCLedger::cumulative_bound() const {
  return 4.0 * graph_.delta() / 5.0;
}

nlohmann::json CCLedger::summary_json() const {
  nlohmann::json j;
  j["steps"] = nlohmann::json::array();
  for (const auto& step : steps_) {
    int max_count = 0;
    for (const auto& [key, count] : step.counts)
      max_count = std::max(max_count, count);
    j["steps"].push_back({{"label", step.label},
                          {"budget", step.budget},
                          {"colored", step.diff.size()},
                          {"entries", step.counts.size()},
                          {"max_count", max_count}});
  }
  return j;
}

}  // namespace dkc
