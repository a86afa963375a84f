#pragma once

#include "dkcolor/stage_env.hpp"

namespace dkc {

// An induced subgraph H to be colored, together with the external-degree
// bound U that makes it pious: every vertex of H keeps at least
// U * delta^{slack_exponent} more available colors than uncolored
// H-neighbors, and uncolored clique vertices have at most U neighbors in
// H minus their All_i.
struct PiousContext {
  std::string name;
  std::vector<Vertex> h;  // sorted
  double u = 0;
  StageId rct_stage{};
  StageId rct_post_stage{};
  StageId mct_stage{};
  StageId mct_post_stage{};
};

AuditReport check_pious(const StageEnv& env, const PiousContext& ctx);

// One synchronous random-color-trial exchange on the uncolored vertices
// `h_prime`. Proposals and retained colors are exposed for CC accounting
// and tests; nothing is committed.
struct RctRound {
  std::vector<char> active;     // n-sized
  std::vector<Color> proposal;  // n-sized, kNone when absent
  std::vector<Color> kept;      // n-sized, kNone when discarded
};

RctRound rct_round(const StageEnv& env, const std::vector<Vertex>& h_prime,
                   StageId stage, std::uint64_t round);

// One multi-color-trial exchange: every vertex samples `trials` available
// colors with repetition and keeps the smallest color absent from its
// neighbors' sample sets.
struct MctRound {
  std::vector<std::vector<Color>> samples;  // n-sized
  std::vector<Color> kept;                  // n-sized
};

MctRound mct_round(const StageEnv& env, const std::vector<Vertex>& h_prime,
                   int trials, StageId stage, std::uint64_t round);

// One shattered degree-reduction iteration on the uncolored part of ctx.h.
// Commits a pre and (when needed) a post coloring step.
void rct_iteration(StageEnv& env, const PiousContext& ctx, int iter,
                   StageTrace& trace);

// Shattered multi-color trial that colors every remaining vertex of ctx.h.
void mct_coloring(StageEnv& env, const PiousContext& ctx, StageTrace& trace);

// Iterated RCT until uncolored degrees drop to the MCT entry threshold,
// then one MCT pass. Fully colors ctx.h or throws StageAbort.
StageTrace color_with_much_slack(StageEnv& env, const PiousContext& ctx);

}  // namespace dkc
