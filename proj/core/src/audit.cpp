#include "dkcolor/audit.hpp"

#include <algorithm>
#include <map>

#include "dkcolor/errors.hpp"

namespace dkc {

void AuditReport::add(const std::string& claim, bool pass, double measured,
                      double bound) {
  checks.push_back({claim, pass, measured, bound});
}

bool AuditReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AuditCheck& c) { return c.pass; });
}

nlohmann::json AuditReport::to_json() const {
  nlohmann::json j;
  j["schema"] = "dkcolor.audit/1";
  j["stage"] = stage;
  j["passed"] = passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"claim", c.claim},
                           {"pass", c.pass},
                           {"measured", c.measured},
                           {"bound", c.bound}});
  }
  j["stats"] = stats;
  return j;
}

std::optional<std::pair<Vertex, Vertex>> properness_scan(
    const Graph& graph, const PartialColoring& coloring) {
  return find_conflict(graph, coloring);
}

double lemma32_statistic(const std::vector<std::vector<Vertex>>& sets,
                         const Lemma32Params& params, const NodeRng& rng) {
  if (params.trials <= 0) throw DomainError("lemma32_statistic: trials <= 0");
  if (params.mark_prob < 0 || params.mark_prob > 1)
    throw DomainError("lemma32_statistic: mark probability out of [0,1]");
  std::map<Vertex, int> membership;
  for (const auto& set : sets) {
    if (static_cast<double>(set.size()) > params.q)
      throw DomainError("lemma32_statistic: set larger than Q");
    for (Vertex v : set) ++membership[v];
  }
  for (const auto& [v, count] : membership) {
    if (static_cast<double>(count) > params.membership_cap)
      throw DomainError("lemma32_statistic: membership cap exceeded");
  }
  if (sets.empty()) return 0.0;

  int tail = 0;
  for (int t = 0; t < params.trials; ++t) {
    std::map<Vertex, bool> marked;
    int sets_with_mark = 0;
    for (const auto& set : sets) {
      bool any = false;
      for (Vertex v : set) {
        auto it = marked.find(v);
        if (it == marked.end()) {
          auto s = rng.stream(static_cast<std::uint64_t>(v), StageId::kTest,
                              static_cast<std::uint64_t>(t));
          it = marked.emplace(v, s.bernoulli(params.mark_prob)).first;
        }
        if (it->second) {
          any = true;
          break;
        }
      }
      if (any) ++sets_with_mark;
    }
    if (sets_with_mark >= params.threshold) ++tail;
  }
  return static_cast<double>(tail) / params.trials;
}

}  // namespace dkc
