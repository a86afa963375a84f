#include "dkcolor/constants.hpp"

#include <cmath>

#include "dkcolor/errors.hpp"
#include "dkcolor/graph.hpp"

namespace dkc {

namespace {

std::map<std::string, double> paper_defaults() {
  return {
      {"cc_budget_exponent", 37.0 / 40},
      {"marking_exponent", 0.2},
      {"degree_floor_exponent", 0.1},
      {"mct_entry_exponent", 0.1},
      {"mct_trials_exponent", 0.1},
      {"mct_slack_coeff", 1.0},
      {"mct_slack_exponent", 9.0 / 20},
      {"slack_exponent", 0.22},
      {"subsample_exponent", -23.0 / 40},
      {"candidate_floor_divisor", 40},
      {"candidate_load_divisor", 80},
      {"cand_pre_mult", 2.0},
      {"cand_pre_add", 0.0},
      {"cand_overlap_mode", 0.0},
      {"rct_activation", 0.25},
      {"drop_factor", 1.0 / 180},
      {"split_p_coeff", 2.0},
      {"split_p_exponent", -0.25},
      {"split_alpha", 4.0},
      {"big_plus_exponent", 0.9},
      {"big_plus_coeff", 2.0},
      {"ext_degree_coeff_h", 1e8},
      {"ext_degree_coeff_l", 30.0},
      {"clique_size_coeff", 1e8},
      {"s_nonedge_coeff", 9e5},
      {"graph_degree_cap_mult", 1e9},
      {"iter_cap_coeff", 1e9},
      {"guard_pre_coeff", 11.0 / 20},
      {"guard_post_coeff", 4.0 / 5},
      {"guard_floor_div", 20.0},
      {"repeat_pre_coeff", 3.0},
      {"repeat_post_coeff", 1.05},
      {"repeat_listsize_mode", 0.0},
      {"listsize_slack_coeff", 0.05},
      {"bl_plus_term", 9.0},
      {"unhappy_coeff", 1e8},
      {"u2_mode", 0.0},  // 0: alpha*delta^{1/4}*ln(delta), 1: ext_bound_l
      {"delta0", 1e6},
  };
}

}  // namespace

AnalysisConstants AnalysisConstants::paper() {
  AnalysisConstants k;
  k.profile_ = "paper";
  k.base_ = paper_defaults();
  return k;
}

AnalysisConstants AnalysisConstants::desk_scale() {
  AnalysisConstants k;
  k.profile_ = "desk";
  k.base_ = paper_defaults();
  // Coefficients that are astronomically large in the published analysis all
  // drop to 1 so that desk instances are constrained but feasible.
  k.overrides_ = {
      {"ext_degree_coeff_h", 1.0},
      {"ext_degree_coeff_l", 1.0},
      {"clique_size_coeff", 1.0},
      {"s_nonedge_coeff", 1.0},
      {"iter_cap_coeff", 1.0},
      {"unhappy_coeff", 1.0},
      // Degree floor for registering degree-drop events. At exponent 1/10
      // the floor is ~1.5 for small delta and the 1/180 drop fails with
      // constant probability; 3/4 keeps event probability genuinely small.
      {"degree_floor_exponent", 0.75},
      // Slack requirement exponent: B_L only guarantees sqrt(delta)/2 slack,
      // which is below U*delta^{0.22} until delta is in the hundreds.
      {"slack_exponent", 0.05},
      // Repeated-color thresholds tied to the exact list-size identity
      // (delta - c) + 0.05*sqrt(delta) instead of multiples of sqrt(delta).
      {"repeat_listsize_mode", 1.0},
      // Pre-phase guard: mean + 4 sigma at desk degrees instead of 11/20.
      {"guard_pre_coeff", 0.75},
      {"guard_post_coeff", 0.9},
      // Candidate subsampling probability and floors sized for cliques with
      // a handful of unhappy vertices.
      {"subsample_exponent", -0.3},
      {"candidate_floor_divisor", 2.0},
      {"candidate_load_divisor", 1.0},
      {"cand_pre_mult", 1.0},
      {"cand_pre_add", 1.0},
      {"cand_overlap_mode", 1.0},
      // Big+ membership threshold 2*delta^{0.9} exceeds the clique size for
      // small delta, which would leave the mechanism untested.
      {"big_plus_exponent", 0.7},
      // MCT slack requirement matches the weakest structural guarantee.
      {"mct_slack_coeff", 0.5},
      {"mct_slack_exponent", 0.5},
      // c - sqrt(delta) + 9 is above c for small delta.
      {"bl_plus_term", 0.0},
      {"u2_mode", 1.0},
  };
  return k;
}

double AnalysisConstants::get(const std::string& name) const {
  if (auto it = overrides_.find(name); it != overrides_.end())
    return it->second;
  if (auto it = base_.find(name); it != base_.end()) return it->second;
  throw DomainError("AnalysisConstants: unknown constant " + name);
}

void AnalysisConstants::set_override(const std::string& name, double value) {
  if (!base_.contains(name))
    throw DomainError("AnalysisConstants: unknown constant " + name);
  overrides_[name] = value;
}

void AnalysisConstants::validate() const {
  auto expect = [&](const std::string& name, bool ok) {
    if (!ok) throw DomainError("AnalysisConstants: bad value for " + name);
  };
  const double cc = get("cc_budget_exponent");
  expect("cc_budget_exponent", cc > 0 && cc < 1);
  for (const char* e : {"marking_exponent", "degree_floor_exponent",
                        "mct_entry_exponent", "mct_trials_exponent",
                        "mct_slack_exponent", "slack_exponent",
                        "subsample_exponent", "split_p_exponent",
                        "big_plus_exponent"}) {
    const double x = std::abs(get(e));
    expect(e, x > 0 && x <= 1);
  }
  for (const char* c2 :
       {"ext_degree_coeff_h", "ext_degree_coeff_l", "clique_size_coeff",
        "s_nonedge_coeff", "graph_degree_cap_mult", "iter_cap_coeff",
        "unhappy_coeff", "candidate_floor_divisor", "candidate_load_divisor",
        "split_alpha", "split_p_coeff", "big_plus_coeff"}) {
    expect(c2, get(c2) > 0);
  }
}

double AnalysisConstants::cc_budget(int delta) const {
  return std::pow(delta, get("cc_budget_exponent"));
}

double AnalysisConstants::ext_bound_h(int delta) const {
  return get("ext_degree_coeff_h") * std::sqrt(double(delta));
}

double AnalysisConstants::ext_bound_l(int delta) const {
  return get("ext_degree_coeff_l") * std::pow(delta, 0.25);
}

double AnalysisConstants::clique_min_size(int delta, int c) const {
  return c - get("clique_size_coeff") * std::sqrt(double(delta));
}

double AnalysisConstants::big_plus_threshold(int delta) const {
  return get("big_plus_coeff") * std::pow(delta, get("big_plus_exponent"));
}

double AnalysisConstants::big_plus_degree_cap(int delta) const {
  return 0.75 * delta + get("ext_degree_coeff_h") * std::sqrt(double(delta));
}

double AnalysisConstants::s_heavy_threshold(int delta) const {
  return delta - 3.0 * std::sqrt(double(delta));
}

double AnalysisConstants::s_nonedge_bound(int delta) const {
  return get("s_nonedge_coeff") * std::pow(delta, 1.5);
}

double AnalysisConstants::bh_outside_bound(int delta, int c) const {
  return c - std::pow(delta, 0.75);
}

double AnalysisConstants::bl_outside_bound(int delta, int c) const {
  return c - std::sqrt(double(delta)) + get("bl_plus_term");
}

double AnalysisConstants::graph_degree_cap_mult() const {
  return get("graph_degree_cap_mult");
}

double AnalysisConstants::rct_activation() const {
  return get("rct_activation");
}

double AnalysisConstants::drop_factor() const { return get("drop_factor"); }

double AnalysisConstants::rct_event_floor(int delta) const {
  return std::pow(delta, get("degree_floor_exponent"));
}

double AnalysisConstants::mct_entry_degree(int delta) const {
  return std::pow(delta, get("mct_entry_exponent"));
}

int AnalysisConstants::mct_trials(int delta) const {
  return static_cast<int>(
      std::ceil(std::pow(delta, get("mct_trials_exponent"))));
}

double AnalysisConstants::mct_slack_req(int delta) const {
  return get("mct_slack_coeff") * std::pow(delta, get("mct_slack_exponent"));
}

int AnalysisConstants::cwms_iter_cap(int delta) const {
  const double x =
      get("iter_cap_coeff") * std::pow(delta, 0.9);
  return static_cast<int>(std::ceil(std::log(x) / get("drop_factor")));
}

double AnalysisConstants::pious_slack(int delta, double u) const {
  return u * std::pow(delta, get("slack_exponent"));
}

double AnalysisConstants::u_high(int delta) const { return ext_bound_h(delta); }

double AnalysisConstants::u_low(int delta) const { return ext_bound_l(delta); }

double AnalysisConstants::u_split1(int delta) const {
  return ext_bound_h(delta);
}

double AnalysisConstants::u_split2(int delta) const {
  if (get("u2_mode") != 0.0) return ext_bound_l(delta);
  return get("split_alpha") * std::pow(delta, 0.25) * std::log(double(delta));
}

double AnalysisConstants::split_p(int delta) const {
  return get("split_p_coeff") * std::pow(delta, get("split_p_exponent"));
}

double AnalysisConstants::split_threshold(int delta) const {
  return get("split_alpha") / split_p(delta) * std::log(double(delta));
}

double AnalysisConstants::guard_pre(int delta, int deg_s) const {
  return std::max(get("guard_pre_coeff") * deg_s,
                  delta / get("guard_floor_div"));
}

double AnalysisConstants::guard_post(int delta, int deg_rest) const {
  return std::max(get("guard_post_coeff") * deg_rest,
                  delta / get("guard_floor_div"));
}

double AnalysisConstants::repeat_post(int delta, int c) const {
  if (get("repeat_listsize_mode") != 0.0) {
    return std::max(0.0, double(delta - c)) + listsize_slack(delta);
  }
  return get("repeat_post_coeff") * std::sqrt(double(delta));
}

double AnalysisConstants::repeat_pre(int delta, int c) const {
  if (get("repeat_listsize_mode") != 0.0) return repeat_post(delta, c) + 1.0;
  return get("repeat_pre_coeff") * std::sqrt(double(delta));
}

double AnalysisConstants::listsize_slack(int delta) const {
  return get("listsize_slack_coeff") * std::sqrt(double(delta));
}

double AnalysisConstants::e3_bound(int delta) const {
  return s_nonedge_bound(delta) / 8.0;
}

double AnalysisConstants::subsample_p(int delta) const {
  return std::pow(delta, get("subsample_exponent"));
}

double AnalysisConstants::cand_floor_final(int delta) const {
  return std::pow(delta, 17.0 / 40) / get("candidate_floor_divisor");
}

double AnalysisConstants::cand_floor_pre(int delta) const {
  return get("cand_pre_mult") * cand_floor_final(delta) + get("cand_pre_add");
}

double AnalysisConstants::cand_load_ceiling(int delta) const {
  return std::pow(delta, 17.0 / 40) / get("candidate_load_divisor");
}

double AnalysisConstants::cand_overlap_bound(int delta) const {
  if (get("cand_overlap_mode") != 0.0) return ext_bound_h(delta) + 1.0;
  return std::pow(delta, 0.1);
}

double AnalysisConstants::unhappy_event_bound(int delta) const {
  return get("unhappy_coeff") * std::sqrt(double(delta));
}

double AnalysisConstants::unhappy_audit_bound(int delta) const {
  return (get("unhappy_coeff") + 1.0) * std::sqrt(double(delta));
}

double AnalysisConstants::swappable_floor(int delta) const {
  return delta / 10.0;
}

double AnalysisConstants::pollution_bound(int delta) const {
  return delta / 20.0;
}

nlohmann::json AnalysisConstants::to_json() const {
  nlohmann::json j;
  j["profile"] = profile_;
  j["overrides"] = overrides_;
  return j;
}

nlohmann::json AnalysisConstants::effective_json(int delta, int c) const {
  nlohmann::json j = to_json();
  nlohmann::json eff;
  eff["k_delta"] = k_delta(delta);
  eff["cc_budget"] = cc_budget(delta);
  eff["ext_bound_h"] = ext_bound_h(delta);
  eff["ext_bound_l"] = ext_bound_l(delta);
  eff["clique_min_size"] = clique_min_size(delta, c);
  eff["big_plus_threshold"] = big_plus_threshold(delta);
  eff["big_plus_degree_cap"] = big_plus_degree_cap(delta);
  eff["s_heavy_threshold"] = s_heavy_threshold(delta);
  eff["s_nonedge_bound"] = s_nonedge_bound(delta);
  eff["bh_outside_bound"] = bh_outside_bound(delta, c);
  eff["bl_outside_bound"] = bl_outside_bound(delta, c);
  eff["rct_event_floor"] = rct_event_floor(delta);
  eff["mct_entry_degree"] = mct_entry_degree(delta);
  eff["mct_trials"] = mct_trials(delta);
  eff["mct_slack_req"] = mct_slack_req(delta);
  eff["cwms_iter_cap"] = cwms_iter_cap(delta);
  eff["u_high"] = u_high(delta);
  eff["u_low"] = u_low(delta);
  eff["u_split1"] = u_split1(delta);
  eff["u_split2"] = u_split2(delta);
  eff["split_p"] = split_p(delta);
  eff["split_threshold"] = split_threshold(delta);
  eff["repeat_pre"] = repeat_pre(delta, c);
  eff["repeat_post"] = repeat_post(delta, c);
  eff["listsize_slack"] = listsize_slack(delta);
  eff["e3_bound"] = e3_bound(delta);
  eff["subsample_p"] = subsample_p(delta);
  eff["cand_floor_final"] = cand_floor_final(delta);
  eff["cand_floor_pre"] = cand_floor_pre(delta);
  eff["cand_load_ceiling"] = cand_load_ceiling(delta);
  eff["cand_overlap_bound"] = cand_overlap_bound(delta);
  eff["unhappy_event_bound"] = unhappy_event_bound(delta);
  eff["unhappy_audit_bound"] = unhappy_audit_bound(delta);
  eff["delta0"] = delta0();
  j["effective"] = eff;
  return j;
}

AnalysisConstants AnalysisConstants::from_json(const nlohmann::json& j) {
  const std::string profile = j.value("profile", "paper");
  AnalysisConstants k =
      profile == "desk" ? desk_scale() : paper();
  if (j.contains("overrides")) {
    for (auto& [name, value] : j["overrides"].items()) {
      k.set_override(name, value.get<double>());
    }
  }
  return k;
}

}  // namespace dkc
