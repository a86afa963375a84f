#include "dkcolor/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <sstream>

namespace dkc {

int k_delta(std::int64_t delta) {
  if (delta < 2) throw DomainError("k_delta: delta must be >= 2");
  // floor(sqrt(delta + 1/4) - 3/2), adjusted to be exact for integers.
  auto k = static_cast<std::int64_t>(std::sqrt(static_cast<double>(delta) + 0.25) - 1.5);
  if (k < 0) k = 0;
  while ((k + 2) * (k + 3) <= delta) ++k;
  while (k > 0 && (k + 1) * (k + 2) > delta) --k;
  return static_cast<int>(k);
}

Graph Graph::from_edges(int n, int delta,
                        const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g;
  g.n_ = n;
  g.delta_ = delta;
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw DomainError("Graph::from_edges: vertex id out of range");
    if (u == v) throw DomainError("Graph::from_edges: self loop");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  g.m_ = 0;
  for (const auto& nb : g.adj_) g.m_ += static_cast<std::int64_t>(nb.size());
  g.m_ /= 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
  return d;
}

void Graph::check_invariants(double degree_cap_mult) const {
  const double cap = degree_cap_mult * delta_;
  for (Vertex v = 0; v < n_; ++v) {
    if (static_cast<double>(adj_[v].size()) > cap)
      throw DomainError("Graph: degree of vertex " + std::to_string(v) +
                        " exceeds cap");
    for (Vertex u : adj_[v]) {
      if (u == v) throw DomainError("Graph: self loop");
      if (!has_edge(u, v)) throw DomainError("Graph: asymmetric adjacency");
    }
  }
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex v = 0; v < n_; ++v)
    for (Vertex u : adj_[v])
      if (v < u) out.emplace_back(v, u);
  return out;
}

std::vector<Vertex> ball(const Graph& g, std::span<const Vertex> sources,
                         int radius) {
  std::vector<int> dist(g.n(), -1);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  std::vector<Vertex> out;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    out.push_back(v);
    if (dist[v] == radius) continue;
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GraphFile read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("read_graph: cannot open " + path);
  int n = 0, delta = 0, c = 0;
  std::int64_t m = 0;
  if (!(in >> n >> m >> delta >> c))
    throw DomainError("read_graph: malformed header in " + path);
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    Vertex u, v;
    if (!(in >> u >> v))
      throw DomainError("read_graph: truncated edge list in " + path);
    edges.emplace_back(u, v);
  }
  GraphFile f;
  f.graph = Graph::from_edges(n, delta, edges);
  f.c = c;
  return f;
}

void write_graph(const std::string& path, const Graph& g, int c) {
  std::ofstream out(path);
  if (!out) throw DomainError("write_graph: cannot open " + path);
  out << g.n() << ' ' << g.edge_count() << ' ' << g.delta() << ' ' << c
      << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace dkc
