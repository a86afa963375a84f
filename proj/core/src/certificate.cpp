#include "dkcolor/certificate.hpp"

#include <algorithm>
#include <numeric>

namespace dkc {

namespace {

bool color_rec(const std::vector<std::vector<char>>& adj,
               const std::vector<int>& order, std::vector<int>& color,
               std::size_t pos, int c, int used) {
  if (pos == order.size()) return true;
  const int v = order[pos];
  // Trying at most one fresh color prunes color permutations.
  const int limit = std::min(c, used + 1);
  for (int x = 1; x <= limit; ++x) {
    bool ok = true;
    for (std::size_t u = 0; u < adj.size(); ++u) {
      if (adj[v][u] && color[u] == x) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[v] = x;
    if (color_rec(adj, order, color, pos + 1, c, std::max(used, x))) return true;
    color[v] = 0;
  }
  return false;
}

}  // namespace

bool is_c_colorable(const std::vector<std::vector<char>>& adj, int c) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return true;
  if (c <= 0) return n == 0;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> deg(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) deg[v] += adj[v][u];
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return deg[a] > deg[b]; });
  std::vector<int> color(n, 0);
  return color_rec(adj, order, color, 0, c, 0);
}

int chromatic_number(const std::vector<std::vector<char>>& adj) {
  const int n = static_cast<int>(adj.size());
  for (int c = 0; c <= n; ++c)
    if (is_c_colorable(adj, c)) return c;
  return n;
}

std::optional<Vertex> certificate_check(const Graph& graph, int c,
                                        int neighborhood_cap) {
  for (Vertex v = 0; v < graph.n(); ++v) {
    std::vector<Vertex> closed;
    closed.push_back(v);
    for (Vertex u : graph.neighbors(v)) closed.push_back(u);
    const int m = static_cast<int>(closed.size());
    if (m > neighborhood_cap)
      throw CapacityError("certificate_check: closed neighborhood of vertex " +
                          std::to_string(v) + " exceeds cap");
    std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (graph.has_edge(closed[i], closed[j])) adj[i][j] = adj[j][i] = 1;
    if (!is_c_colorable(adj, c)) return v;
  }
  return std::nullopt;
}

}  // namespace dkc
