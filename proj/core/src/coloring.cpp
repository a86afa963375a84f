#include "dkcolor/coloring.hpp"

#include <algorithm>

namespace dkc {

void PartialColoring::set(Vertex v, Color x) {
  if (x < 1 || x > c_)
    throw DomainError("PartialColoring::set: color out of [1,c]");
  color_[v] = x;
}

int PartialColoring::colored_count() const {
  int k = 0;
  for (Color x : color_) k += (x != kNone);
  return k;
}

std::vector<Color> palette(Vertex v, const PartialColoring& coloring,
                           const Graph& graph) {
  std::vector<char> used(coloring.c() + 1, 0);
  for (Vertex u : graph.neighbors(v)) {
    Color x = coloring.color(u);
    if (x != PartialColoring::kNone) used[x] = 1;
  }
  std::vector<Color> out;
  for (Color x = 1; x <= coloring.c(); ++x)
    if (!used[x]) out.push_back(x);
  return out;
}

int palette_size(Vertex v, const PartialColoring& coloring,
                 const Graph& graph) {
  std::vector<char> used(coloring.c() + 1, 0);
  int distinct = 0;
  for (Vertex u : graph.neighbors(v)) {
    Color x = coloring.color(u);
    if (x != PartialColoring::kNone && !used[x]) {
      used[x] = 1;
      ++distinct;
    }
  }
  return coloring.c() - distinct;
}

int slack(Vertex v, const std::vector<char>& in_subgraph,
          const PartialColoring& coloring, const Graph& graph) {
  int uncolored = 0;
  for (Vertex u : graph.neighbors(v))
    if (in_subgraph[u] && !coloring.is_colored(u)) ++uncolored;
  return palette_size(v, coloring, graph) - uncolored;
}

std::optional<std::pair<Vertex, Vertex>> find_conflict(
    const Graph& graph, const PartialColoring& coloring) {
  for (Vertex v = 0; v < graph.n(); ++v) {
    Color x = coloring.color(v);
    if (x == PartialColoring::kNone) continue;
    for (Vertex u : graph.neighbors(v))
      if (u > v && coloring.color(u) == x) return std::make_pair(v, u);
  }
  return std::nullopt;
}

}  // namespace dkc
