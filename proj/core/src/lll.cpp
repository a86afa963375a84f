#include "dkcolor/lll.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace dkc {

nlohmann::json ShatterOutcome::to_json() const {
  nlohmann::json j;
  j["success"] = success;
  j["occurred_pre"] = occurred_pre;
  j["retracted_count"] = retracted.size();
  j["rounds_simulated"] = rounds_simulated;
  j["largest_component"] = largest_component;
  std::unordered_map<int, int> hist;
  for (const auto& comp : components) ++hist[static_cast<int>(comp.event_ids.size())];
  nlohmann::json h = nlohmann::json::object();
  for (auto [size, count] : hist) h[std::to_string(size)] = count;
  j["component_size_histogram"] = h;
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& comp : components) rs.push_back(comp.resamples);
  j["resample_counts"] = rs;
  if (!surviving.empty()) j["surviving"] = surviving;
  return j;
}

std::vector<int> evaluate_events(std::span<const BadEvent> events) {
  std::vector<int> out;
  for (const auto& e : events)
    if (e.holds()) out.push_back(e.id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> dependency_components(
    std::span<const BadEvent> events) {
  const int m = static_cast<int>(events.size());
  std::vector<int> parent(m);
  for (int i = 0; i < m; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::unordered_map<Vertex, int> first_holder;
  for (int i = 0; i < m; ++i) {
    for (Vertex v : events[i].vbl()) {
      auto [it, fresh] = first_holder.try_emplace(v, i);
      if (!fresh) {
        int a = find(it->second), b = find(i);
        if (a != b) parent[b] = a;
      }
    }
  }
  std::unordered_map<int, std::vector<int>> groups;
  for (int i = 0; i < m; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, g] : groups) {
    std::sort(g.begin(), g.end(), [&](int a, int b) {
      return events[a].id < events[b].id;
    });
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return events[a[0]].id < events[b[0]].id;
  });
  return out;
}

std::vector<int> select_post_events(std::span<const BadEvent> events,
                                    const Graph& variable_graph,
                                    std::span<const Vertex> retracted,
                                    int radius) {
  std::vector<char> near(variable_graph.n(), 0);
  for (Vertex v : ball(variable_graph, retracted, radius)) near[v] = 1;
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(events.size()); ++i) {
    for (Vertex v : events[i].vbl()) {
      if (near[v]) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

namespace {

// Diameter proxy: eccentricity of the first variable within the component's
// induced variable set (used only for round accounting).
int component_diameter(const Graph& g, const std::vector<Vertex>& vars) {
  if (vars.size() <= 1) return 0;
  std::vector<char> in(g.n(), 0);
  for (Vertex v : vars) in[v] = 1;
  std::vector<int> dist(g.n(), -1);
  std::deque<Vertex> q;
  dist[vars[0]] = 0;
  q.push_back(vars[0]);
  int ecc = 0;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    ecc = std::max(ecc, dist[v]);
    for (Vertex u : g.neighbors(v)) {
      if (in[u] && dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push_back(u);
      }
    }
  }
  // Disconnected-in-induced-subgraph components still count their size.
  return std::max(ecc, 1);
}

std::vector<Vertex> sorted_union(std::span<const BadEvent> events,
                                 const std::vector<int>& idx) {
  std::vector<Vertex> out;
  for (int i : idx)
    out.insert(out.end(), events[i].vbl().begin(), events[i].vbl().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ShatterOutcome run_shattered_stage(const ShatteredStageSpec& spec,
                                   const Graph& variable_graph) {
  ShatterOutcome out;
  spec.pre_sample();
  out.rounds_simulated += 1;

  const std::vector<BadEvent> pre = spec.pre_events();
  out.occurred_pre = evaluate_events(pre);
  if (out.occurred_pre.empty()) return out;

  {
    std::vector<int> occ_idx;
    for (int i = 0; i < static_cast<int>(pre.size()); ++i)
      if (std::binary_search(out.occurred_pre.begin(), out.occurred_pre.end(),
                             pre[i].id))
        occ_idx.push_back(i);
    out.retracted = sorted_union(pre, occ_idx);
  }
  spec.retract(out.retracted);
  out.rounds_simulated += 1;

  const std::vector<Vertex> domain = spec.post_domain(out.retracted);
  std::vector<char> in_domain(variable_graph.n(), 0);
  for (Vertex v : domain) in_domain[v] = 1;

  const std::vector<BadEvent> candidates = spec.post_events(out.retracted);
  const std::vector<int> selected = select_post_events(
      candidates, variable_graph, out.retracted, spec.plan.retraction_radius);
  std::vector<BadEvent> post;
  post.reserve(selected.size());
  for (int i : selected) post.push_back(candidates[i]);

  // Initial post pass covers the whole domain at epoch 0.
  spec.post_sample(domain, 0);
  out.rounds_simulated += 1;

  auto components = dependency_components(post);
  int max_rounds_over_components = 0;
  for (const auto& comp : components) {
    ComponentStat stat;
    for (int i : comp) stat.event_ids.push_back(post[i].id);
    stat.vars = sorted_union(post, comp);
    stat.diameter = component_diameter(variable_graph, stat.vars);
    out.largest_component =
        std::max(out.largest_component, static_cast<int>(stat.vars.size()));
    if (static_cast<int>(stat.vars.size()) > spec.plan.component_size_cap) {
      out.success = false;
      for (int i : comp) out.surviving.push_back(post[i].id);
      out.components.push_back(std::move(stat));
      continue;
    }

    std::uint64_t epoch = 0;
    bool solved = false;
    while (stat.resamples < spec.plan.resample_budget) {
      std::vector<int> violated;
      for (int i : comp)
        if (post[i].holds()) violated.push_back(i);
      if (violated.empty()) {
        solved = true;
        break;
      }
      const int target = *std::min_element(
          violated.begin(), violated.end(),
          [&](int a, int b) { return post[a].id < post[b].id; });
      std::vector<Vertex> to_resample;
      for (Vertex v : post[target].vbl())
        if (in_domain[v]) to_resample.push_back(v);
      if (to_resample.empty()) break;  // cannot make progress
      spec.post_sample(to_resample, ++epoch);
      ++stat.resamples;
    }
    if (!solved) {
      out.success = false;
      for (int i : comp)
        if (post[i].holds()) out.surviving.push_back(post[i].id);
    }
    max_rounds_over_components = std::max(
        max_rounds_over_components, stat.resamples * (stat.diameter + 1));
    out.components.push_back(std::move(stat));
  }
  out.rounds_simulated += max_rounds_over_components;
  std::sort(out.surviving.begin(), out.surviving.end());
  return out;
}

}  // namespace dkc
