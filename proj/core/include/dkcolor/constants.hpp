#pragma once

#include <cmath>
#include <map>
#include <string>

#include "json.hpp"

namespace dkc {

// Analysis constants: exponents and coefficients driving every threshold in
// the pipeline. The `paper` profile keeps the published values, which are
// meaningful only for very large maximum degree. The `desk` profile replaces
// coefficients (and a few exponents) so that instances with delta in the
// tens-to-hundreds range are neither vacuously valid nor impossible; every
// report echoes the effective values in use.
class AnalysisConstants {
 public:
  static AnalysisConstants paper();
  // Documented desk-scale overrides; see README for the rationale per knob.
  static AnalysisConstants desk_scale();

  const std::string& profile() const { return profile_; }
  double get(const std::string& name) const;
  void set_override(const std::string& name, double value);
  const std::map<std::string, double>& overrides() const { return overrides_; }

  // Checks exponent/coefficient ranges; throws DomainError on violation.
  void validate() const;

  // ---- derived thresholds ----------------------------------------------
  // Per-(step, clique, color) budget on newly covered clique members.
  double cc_budget(int delta) const;
  double cc_strong_mult() const { return 2.0; }

  double ext_bound_h(int delta) const;   // external degree cap, A_H cliques
  double ext_bound_l(int delta) const;   // external degree cap, A_L cliques
  double clique_min_size(int delta, int c) const;
  double big_plus_threshold(int delta) const;   // >= this many edges into A_i
  double big_plus_degree_cap(int delta) const;  // <= 3/4*delta + coeff*sqrt
  double s_heavy_threshold(int delta) const;    // delta - 3*sqrt(delta)
  double s_nonedge_bound(int delta) const;      // required non-edges, heavy S
  double bh_outside_bound(int delta, int c) const;  // < c - delta^{3/4}
  double bl_outside_bound(int delta, int c) const;  // <= c - sqrt + term
  double graph_degree_cap_mult() const;             // F degree <= mult*delta

  double rct_activation() const;         // p_a
  double drop_factor() const;            // 1/180
  double rct_event_floor(int delta) const;
  double mct_entry_degree(int delta) const;
  int mct_trials(int delta) const;
  double mct_slack_req(int delta) const;
  int cwms_iter_cap(int delta) const;
  double pious_slack(int delta, double u) const;  // U * delta^{slack_exp}

  double u_high(int delta) const;
  double u_low(int delta) const;
  double u_split1(int delta) const;
  double u_split2(int delta) const;

  double split_p(int delta) const;
  double split_threshold(int delta) const;  // alpha * p^-1 * ln(delta)

  double guard_pre(int delta, int deg_s) const;
  double guard_post(int delta, int deg_rest) const;
  double repeat_pre(int delta, int c) const;
  double repeat_post(int delta, int c) const;
  double listsize_slack(int delta) const;  // 0.05 * sqrt(delta)
  double e3_bound(int delta) const;        // nonedge bound / 8

  double subsample_p(int delta) const;
  double cand_floor_final(int delta) const;
  double cand_floor_pre(int delta) const;
  double cand_load_ceiling(int delta) const;
  double cand_overlap_bound(int delta) const;  // B1' neighbor-count threshold
  double unhappy_event_bound(int delta) const;
  double unhappy_audit_bound(int delta) const;
  double swappable_floor(int delta) const;  // delta/10
  double pollution_bound(int delta) const;  // delta/20

  double delta0() const { return get("delta0"); }

  nlohmann::json to_json() const;
  // Full echo of effective thresholds for a concrete instance.
  nlohmann::json effective_json(int delta, int c) const;
  static AnalysisConstants from_json(const nlohmann::json& j);

 private:
  AnalysisConstants() = default;
  std::string profile_ = "paper";
  std::map<std::string, double> base_;
  std::map<std::string, double> overrides_;
};

}  // namespace dkc
