#include "dkcolor/generator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

namespace dkc {

namespace {

struct EdgeSet {
  std::set<std::pair<Vertex, Vertex>> edges;
  std::vector<int> degree;

  explicit EdgeSet(int n) : degree(n, 0) {}

  bool has(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return edges.contains({u, v});
  }

  bool add(Vertex u, Vertex v) {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    if (!edges.insert({u, v}).second) return false;
    ++degree[u];
    ++degree[v];
    return true;
  }

  std::vector<std::pair<Vertex, Vertex>> to_vector() const {
    return {edges.begin(), edges.end()};
  }
};

}  // namespace

GeneratedInstance generate(const GenParams& p, const AnalysisConstants& k) {
  const int delta = p.delta;
  if (delta < 4) throw FeasibilityError("generate: delta must be >= 4");
  const int kd = k_delta(delta);
  const int c = p.c.value_or(delta - kd + 1);
  if (c < delta - kd + 1)
    throw FeasibilityError("generate: c below delta - k_delta + 1");

  const int min_size =
      std::max(2, static_cast<int>(std::ceil(k.clique_min_size(delta, c))));
  if (min_size > c)
    throw FeasibilityError("generate: clique size window empty (c too small)");

  const double heavy_thr = k.s_heavy_threshold(delta);
  const int default_cap = std::min(static_cast<int>(0.55 * delta),
                                   static_cast<int>(heavy_thr) - 1);
  const int s_cap = p.s_degree_cap.value_or(std::max(2, default_cap));
  const int s_avg = p.s_avg_degree.value_or(std::max(2, s_cap * 3 / 4));
  if (s_avg > s_cap)
    throw FeasibilityError("generate: s_avg_degree exceeds s_degree_cap");
  if (p.heavy_s_count == 0 && s_cap >= heavy_thr)
    throw FeasibilityError("generate: s_degree_cap reaches heavy threshold");

  NodeRng rng(p.seed);
  auto gs = rng.stream(std::uint64_t{0}, StageId::kGenerate, std::uint64_t{0});

  const int num_cliques = p.cliques_h + p.cliques_l;
  std::vector<int> sizes(num_cliques);
  int dense_total = 0;
  for (int i = 0; i < num_cliques; ++i) {
    sizes[i] = min_size + static_cast<int>(gs.below(c - min_size + 1));
    dense_total += c;  // members + all = c per clique
  }
  const int hosts = num_cliques > 0 ? p.big_plus_hosts : 0;
  const int s_count = p.n - dense_total - hosts;
  if (s_count < std::max(16, p.heavy_s_count * (delta + 1)))
    throw FeasibilityError(
        "generate: n too small for requested cliques and heavy vertices");

  // Vertex layout: S block, then per-clique members, then per-clique All
  // sets, then big+ hosts.
  GeneratedInstance out;
  Decomposition& d = out.decomposition;
  int next = 0;
  std::vector<Vertex> s_vertices(s_count);
  for (int i = 0; i < s_count; ++i) s_vertices[i] = next++;
  d.s = s_vertices;

  d.cliques.resize(num_cliques);
  for (int i = 0; i < num_cliques; ++i) {
    auto& q = d.cliques[i];
    q.id = i;
    q.tier = i < p.cliques_h ? Tier::H : Tier::L;
    q.members.resize(sizes[i]);
    for (auto& v : q.members) v = next++;
  }
  for (int i = 0; i < num_cliques; ++i) {
    auto& q = d.cliques[i];
    q.all.resize(c - sizes[i]);
    for (auto& v : q.all) v = next++;
    auto& target = q.tier == Tier::H ? d.bh : d.bl;
    target.insert(target.end(), q.all.begin(), q.all.end());
  }
  std::vector<Vertex> host_ids(hosts);
  for (auto& v : host_ids) v = next++;
  d.bh.insert(d.bh.end(), host_ids.begin(), host_ids.end());
  if (next != p.n) throw FeasibilityError("generate: vertex layout mismatch");

  EdgeSet es(p.n);

  // Clique interiors and All sets. All_i is generated as a clique and fully
  // attached to A_i, so a synchronized trial always sees exactly |A_i|
  // unused colors.
  for (auto& q : d.cliques) {
    for (std::size_t i = 0; i < q.members.size(); ++i)
      for (std::size_t j = i + 1; j < q.members.size(); ++j)
        es.add(q.members[i], q.members[j]);
    for (std::size_t i = 0; i < q.all.size(); ++i) {
      for (Vertex m : q.members) es.add(q.all[i], m);
      for (std::size_t j = i + 1; j < q.all.size(); ++j)
        es.add(q.all[i], q.all[j]);
    }
  }

  // Big+ hosts: each host picks a clique (low tier preferred so the set is
  // tracked longest), gets enough member edges to cross the threshold, and
  // hosts of the same clique are made mutually adjacent.
  const int bp_threshold =
      static_cast<int>(std::ceil(k.big_plus_threshold(delta)));
  const int bp_cap = static_cast<int>(k.big_plus_degree_cap(delta));
  std::vector<int> ext_used(p.n, 0);
  std::vector<std::vector<Vertex>> hosts_of(num_cliques);
  if (hosts > 0) {
    if (bp_threshold > bp_cap || bp_threshold > min_size)
      throw FeasibilityError("generate: big+ threshold above clique size");
    for (int h = 0; h < hosts; ++h) {
      const int tgt = p.cliques_l > 0
                          ? p.cliques_h + static_cast<int>(gs.below(p.cliques_l))
                          : static_cast<int>(gs.below(num_cliques));
      auto& q = d.cliques[tgt];
      const int span = std::min<int>({bp_cap, static_cast<int>(q.members.size()),
                                      bp_threshold + 3});
      const int deg = bp_threshold + static_cast<int>(gs.below(
                                         std::max(1, span - bp_threshold + 1)));
      std::vector<Vertex> pool = q.members;
      for (int i = 0; i < deg; ++i) {
        const auto idx = gs.below(pool.size());
        Vertex m = pool[idx];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
        es.add(host_ids[h], m);
        ++ext_used[m];
      }
      for (Vertex other : hosts_of[tgt]) es.add(host_ids[h], other);
      hosts_of[tgt].push_back(host_ids[h]);
      q.big_plus.push_back(host_ids[h]);
    }
    for (auto& q : d.cliques) std::sort(q.big_plus.begin(), q.big_plus.end());
  }

  // Sparse block: random S-S edges up to the average degree target, never
  // crossing the per-vertex cap.
  if (s_count > 1) {
    const std::int64_t target_edges =
        static_cast<std::int64_t>(s_count) * s_avg / 2;
    std::int64_t placed = 0;
    std::int64_t attempts = 0;
    const std::int64_t max_attempts = target_edges * 40 + 1000;
    while (placed < target_edges && attempts++ < max_attempts) {
      Vertex u = s_vertices[gs.below(s_count)];
      Vertex v = s_vertices[gs.below(s_count)];
      if (u == v || es.degree[u] >= s_cap || es.degree[v] >= s_cap) continue;
      if (es.add(u, v)) ++placed;
    }
  }

  // Optional heavy sparse vertices for the non-edge branch of the S rule.
  // Their neighborhoods stay sparse so the required non-edge count holds.
  if (p.heavy_s_count > 0) {
    const int heavy_deg = delta;
    const double need_nonedges = k.s_nonedge_bound(delta);
    for (int h = 0; h < p.heavy_s_count; ++h) {
      Vertex hv = s_vertices[h];  // dedicated vertices at the front of S
      std::vector<Vertex> nbrs;
      std::int64_t guard = 0;
      while (static_cast<int>(nbrs.size()) + es.degree[hv] < heavy_deg &&
             guard++ < 50LL * delta) {
        Vertex u = s_vertices[p.heavy_s_count + gs.below(s_count - p.heavy_s_count)];
        if (u == hv || es.has(hv, u) || es.degree[u] >= delta) continue;
        if (es.add(hv, u)) nbrs.push_back(u);
      }
      std::int64_t nonedges = 0;
      for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
          if (!es.has(nbrs[i], nbrs[j])) ++nonedges;
      if (static_cast<double>(nonedges) < need_nonedges)
        throw FeasibilityError(
            "generate: heavy vertex neighborhood too dense for non-edge bound");
    }
  }

  // Member external edges: into S (bounded by the low-tier external bound so
  // the second sparse batch stays pious) and across cliques.
  const int ext_h = static_cast<int>(k.ext_bound_h(delta));
  const int ext_l = static_cast<int>(k.ext_bound_l(delta));
  const int into_s_cap = std::max(1, ext_l);
  auto ext_budget = [&](const CliqueInfo& q) {
    return q.tier == Tier::H ? ext_h : ext_l;
  };
  for (auto& q : d.cliques) {
    const int budget = ext_budget(q);
    for (Vertex m : q.members) {
      if (s_count == 0) break;
      const int want =
          static_cast<int>(gs.below(static_cast<std::uint64_t>(
              std::min(into_s_cap, budget - ext_used[m]) + 1)));
      for (int t = 0; t < want; ++t) {
        Vertex u = s_vertices[gs.below(s_count)];
        if (es.add(m, u)) ++ext_used[m];
      }
    }
  }
  if (num_cliques > 1) {
    for (auto& q : d.cliques) {
      const int budget = ext_budget(q);
      for (Vertex m : q.members) {
        if (ext_used[m] >= budget) continue;
        if (gs.unit() < 0.5) continue;
        const int oi = static_cast<int>(gs.below(num_cliques));
        auto& other = d.cliques[oi];
        if (other.id == q.id) continue;
        Vertex w = other.members[gs.below(other.members.size())];
        if (ext_used[w] >= ext_budget(other)) continue;
        if (es.add(m, w)) {
          ++ext_used[m];
          ++ext_used[w];
        }
      }
    }
  }

  std::sort(d.s.begin(), d.s.end());
  std::sort(d.bh.begin(), d.bh.end());
  std::sort(d.bl.begin(), d.bl.end());
  for (auto& q : d.cliques) {
    std::sort(q.members.begin(), q.members.end());
    std::sort(q.all.begin(), q.all.end());
  }

  out.graph = Graph::from_edges(p.n, delta, es.to_vector());
  out.c = c;
  d.build_index(p.n);

  auto rep = validate(out.graph, d, c, k);
  if (!rep.passed) {
    std::string first = rep.violations.empty() ? "?" : rep.violations[0].rule;
    throw FeasibilityError("generate: constructed instance fails rule " +
                           first);
  }
  return out;
}

}  // namespace dkc
