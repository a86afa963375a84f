#pragma once

#include <optional>
#include <vector>

#include "dkcolor/graph.hpp"

namespace dkc {

// Vertex -> color map over colors 1..c; 0 is the "uncolored" sentinel and is
// never a legal color. Properness is checked on demand and enforced when a
// stage commits.
class PartialColoring {
 public:
  static constexpr Color kNone = 0;

  PartialColoring() = default;
  PartialColoring(int n, int c) : c_(c), color_(n, kNone) {}

  int c() const { return c_; }
  int n() const { return static_cast<int>(color_.size()); }
  Color color(Vertex v) const { return color_[v]; }
  bool is_colored(Vertex v) const { return color_[v] != kNone; }

  void set(Vertex v, Color x);
  void unset(Vertex v) { color_[v] = kNone; }

  int step() const { return step_; }
  void bump_step() { ++step_; }

  int colored_count() const;

  bool operator==(const PartialColoring&) const = default;

 private:
  int c_ = 0;
  int step_ = 0;
  std::vector<Color> color_;
};

// Colors in [1,c] not used by any colored neighbor of v.
std::vector<Color> palette(Vertex v, const PartialColoring& coloring,
                           const Graph& graph);

// |palette(v)| without materializing the set.
int palette_size(Vertex v, const PartialColoring& coloring, const Graph& graph);

// |palette(v)| - |uncolored neighbors of v inside `subgraph`|. `in_subgraph`
// is an n-sized membership mask. May be negative.
int slack(Vertex v, const std::vector<char>& in_subgraph,
          const PartialColoring& coloring, const Graph& graph);

// First monochromatic edge if any (properness scan helper).
std::optional<std::pair<Vertex, Vertex>> find_conflict(
    const Graph& graph, const PartialColoring& coloring);

}  // namespace dkc
