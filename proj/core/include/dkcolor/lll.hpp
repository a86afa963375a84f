#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dkcolor/graph.hpp"
#include "json.hpp"

namespace dkc {

// A bad event over a set of variable-graph vertices. The predicate closes
// over the owning stage's working state and must read only variables held
// by vertices in vbl() (checked by instrumented assignments in tests).
// Variable sets may be provided lazily; they are only materialized for
// events that occur or join the post-shattering instance.
struct BadEvent {
  int id = 0;
  std::string kind;
  std::function<bool()> holds;
  bool fresh_budget = false;

  BadEvent() = default;
  BadEvent(int id_, std::string kind_, std::vector<Vertex> vars,
           std::function<bool()> holds_, bool fresh = false)
      : id(id_), kind(std::move(kind_)), holds(std::move(holds_)),
        fresh_budget(fresh), vbl_(std::move(vars)), have_vbl_(true) {}
  BadEvent(int id_, std::string kind_,
           std::function<std::vector<Vertex>()> vbl_fn,
           std::function<bool()> holds_, bool fresh = false)
      : id(id_), kind(std::move(kind_)), holds(std::move(holds_)),
        fresh_budget(fresh), vbl_fn_(std::move(vbl_fn)) {}

  const std::vector<Vertex>& vbl() const {
    if (!have_vbl_) {
      vbl_ = vbl_fn_();
      have_vbl_ = true;
    }
    return vbl_;
  }

 private:
  mutable std::vector<Vertex> vbl_;
  mutable bool have_vbl_ = false;
  std::function<std::vector<Vertex>()> vbl_fn_;
};

struct ShatterPlan {
  int retraction_radius = 0;     // c_{B'} in the variable graph
  int component_size_cap = 1 << 30;
  int resample_budget = 10000;   // per component
};

struct ComponentStat {
  std::vector<int> event_ids;
  std::vector<Vertex> vars;
  int resamples = 0;
  int diameter = 0;
};

struct ShatterOutcome {
  bool success = true;
  std::vector<int> occurred_pre;       // event ids
  std::vector<Vertex> retracted;       // sorted union of their vbl
  std::vector<ComponentStat> components;
  std::vector<int> surviving;          // event ids still violated on failure
  int rounds_simulated = 0;
  int largest_component = 0;
  nlohmann::json to_json() const;
};

// Ids of events whose predicate currently holds.
std::vector<int> evaluate_events(std::span<const BadEvent> events);

// Connected components of the dependency graph (edges iff vbl intersect).
// Returns groups of indices into `events`, each sorted, ordered by smallest
// contained event id.
std::vector<std::vector<int>> dependency_components(
    std::span<const BadEvent> events);

// Events with a variable within `radius` hops of a retracted vertex in the
// variable graph. Returns indices into `events`.
std::vector<int> select_post_events(std::span<const BadEvent> events,
                                    const Graph& variable_graph,
                                    std::span<const Vertex> retracted,
                                    int radius);

// One shattered stage: pre-sample, evaluate, retract, then solve each
// post-shattering dependency component by resampling (lowest violated event
// id first, bounded by the plan's resample budget).
struct ShatteredStageSpec {
  std::string name;
  ShatterPlan plan;
  std::function<void()> pre_sample;
  std::function<std::vector<BadEvent>()> pre_events;
  std::function<void(const std::vector<Vertex>&)> retract;
  // Vertices that resample in the post phase (must cover the retracted set).
  std::function<std::vector<Vertex>(const std::vector<Vertex>&)> post_domain;
  std::function<std::vector<BadEvent>(const std::vector<Vertex>&)> post_events;
  // Sample post values for `vertices`; epoch 0 is the initial pass, higher
  // epochs are resamplings and must draw fresh randomness.
  std::function<void(std::span<const Vertex>, std::uint64_t epoch)> post_sample;
};

ShatterOutcome run_shattered_stage(const ShatteredStageSpec& spec,
                                   const Graph& variable_graph);

}  // namespace dkc
