#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dkcolor/coloring.hpp"
#include "dkcolor/rng.hpp"
#include "json.hpp"

namespace dkc {

struct AuditCheck {
  std::string claim;
  bool pass = false;
  double measured = 0;
  double bound = 0;
};

// Machine-parseable per-stage audit. Any failed deterministic check marks
// the run rejected; statistical summaries ride along as data.
struct AuditReport {
  std::string stage;
  std::vector<AuditCheck> checks;
  nlohmann::json stats = nlohmann::json::object();

  void add(const std::string& claim, bool pass, double measured, double bound);
  bool passed() const;
  nlohmann::json to_json() const;
};

// First monochromatic edge, or nullopt when the coloring is proper.
std::optional<std::pair<Vertex, Vertex>> properness_scan(
    const Graph& graph, const PartialColoring& coloring);

struct Lemma32Params {
  double q = 0;               // max set size
  double membership_cap = 0;  // max sets any vertex may lie in
  double mark_prob = 0;       // per-vertex marking probability
  double threshold = 0;       // "many sets marked" cutoff
  int trials = 1000;
};

// Empirical frequency, over independent marking trials, that at least
// `threshold` sets contain a marked vertex. The family must respect the
// size and membership preconditions.
double lemma32_statistic(const std::vector<std::vector<Vertex>>& sets,
                         const Lemma32Params& params, const NodeRng& rng);

}  // namespace dkc
