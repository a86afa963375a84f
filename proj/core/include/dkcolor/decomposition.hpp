#pragma once

#include <string>
#include <vector>

#include "dkcolor/constants.hpp"
#include "dkcolor/graph.hpp"
#include "json.hpp"

namespace dkc {

enum class Tier : std::uint8_t { H, L };

enum class Part : std::int8_t {
  kNone = -1,
  kS = 0,
  kBH = 1,
  kBL = 2,
  kClique = 3,
};

struct CliqueInfo {
  int id = 0;
  Tier tier = Tier::H;
  std::vector<Vertex> members;   // sorted
  std::vector<Vertex> all;       // All_i, subset of B_H u B_L, sorted
  std::vector<Vertex> big_plus;  // sorted
};

// Five-way vertex partition S / B_H / B_L / cliques(A_H) / cliques(A_L),
// plus per-clique All_i and Big_i+ sets. Index structures are derived and
// must be rebuilt after any mutation (tests mutate on purpose).
struct Decomposition {
  std::vector<Vertex> s, bh, bl;
  std::vector<CliqueInfo> cliques;

  // Derived; build_index() fills these.
  std::vector<Part> part_of;
  std::vector<int> clique_of;                 // -1 if not a clique member
  std::vector<std::vector<int>> all_of;       // clique ids with v in All_i
  std::vector<std::vector<int>> big_of;       // clique ids with v in Big_i+

  void build_index(int n);
  bool in_all(Vertex v, int clique_id) const;
  bool in_big(Vertex v, int clique_id) const;
  // True if v is outside A_i u All_i u Big_i+ (the CC-relevant test).
  bool cc_external(Vertex v, int clique_id) const;
  // True if v is outside A_i u All_i.
  bool external(Vertex v, int clique_id) const;

  std::vector<int> clique_ids(Tier t) const;
};

struct Violation {
  std::string rule;
  std::vector<Vertex> witness;
  double measured = 0;
  double bound = 0;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool passed = false;
  nlohmann::json to_json() const;
};

// Rule checks from the structural decomposition, with witnesses on failure.
ValidationReport validate(const Graph& graph, const Decomposition& d, int c,
                          const AnalysisConstants& k);

// N(v) minus (A_i u All_i). v must be a member of the clique.
std::vector<Vertex> external_neighbors(Vertex v, const CliqueInfo& clique,
                                       const Graph& graph);

// Scan for vertices outside A_i u All_i with >= threshold neighbors in A_i.
std::vector<Vertex> compute_big_plus(const Graph& graph, const Decomposition& d,
                                     int clique_id,
                                     const AnalysisConstants& k);

// Companion text format: "S v...", "BH v...", "BL v...", then one line per
// clique "AH <i>: members | all | bigplus" (likewise "AL").
Decomposition read_decomposition(const std::string& path, int n);
void write_decomposition(const std::string& path, const Decomposition& d);

}  // namespace dkc
