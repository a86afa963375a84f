#pragma once

#include <cstdint>
#include <optional>

#include "dkcolor/decomposition.hpp"
#include "dkcolor/rng.hpp"

namespace dkc {

// Parameters for synthetic instances that satisfy the structural
// decomposition by construction (and are re-checked by validate()).
struct GenParams {
  int n = 2000;
  int delta = 64;
  std::optional<int> c;      // default: delta - k_delta + 1
  int cliques_h = 4;
  int cliques_l = 3;
  std::optional<int> s_avg_degree;   // default: ~delta/2, capped
  std::optional<int> s_degree_cap;   // default: below the heavy threshold
  int heavy_s_count = 0;     // vertices exercising the non-edge branch
  int big_plus_hosts = 2;    // near-complete outside neighbors, total
  std::uint64_t seed = 1;
};

struct GeneratedInstance {
  Graph graph;
  Decomposition decomposition;
  int c = 0;
};

// Builds a graph-plus-decomposition pair for which validate() passes under
// the given constants. Throws FeasibilityError naming the violated
// constraint when the parameters cannot work.
GeneratedInstance generate(const GenParams& params,
                           const AnalysisConstants& k);

}  // namespace dkc
