#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dkcolor/errors.hpp"

namespace dkc {

using Vertex = std::int32_t;
using Color = std::int32_t;

// Largest k with (k+1)(k+2) <= delta. Requires delta >= 2.
int k_delta(std::int64_t delta);

// Immutable adjacency structure over dense vertex ids 0..n-1. `delta` is the
// declared maximum degree of the original graph; the stored graph itself may
// have larger degrees (up to a configured multiple of delta).
class Graph {
 public:
  Graph() = default;
  static Graph from_edges(int n, int delta,
                          const std::vector<std::pair<Vertex, Vertex>>& edges);

  int n() const { return n_; }
  int delta() const { return delta_; }
  std::int64_t edge_count() const { return m_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex u, Vertex v) const;
  int max_degree() const;

  // Symmetric, irreflexive, sorted lists, degree <= degree_cap_mult * delta.
  void check_invariants(double degree_cap_mult) const;

  std::vector<std::pair<Vertex, Vertex>> edges() const;

 private:
  int n_ = 0;
  int delta_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

// Vertices within `radius` hops of any source (sources included).
std::vector<Vertex> ball(const Graph& g, std::span<const Vertex> sources,
                         int radius);

// Plain-text format: first line "n m delta c", then m lines "u v" (0-based).
struct GraphFile {
  Graph graph;
  int c = 0;
};

GraphFile read_graph(const std::string& path);
void write_graph(const std::string& path, const Graph& g, int c);

}  // namespace dkc
