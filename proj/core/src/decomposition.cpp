#include "dkcolor/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace dkc {

namespace {

bool sorted_contains(const std::vector<Vertex>& v, Vertex x) {
  return std::binary_search(v.begin(), v.end(), x);
}

bool contains_int(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

void Decomposition::build_index(int n) {
  part_of.assign(n, Part::kNone);
  clique_of.assign(n, -1);
  all_of.assign(n, {});
  big_of.assign(n, {});
  for (Vertex v : s) part_of[v] = Part::kS;
  for (Vertex v : bh) part_of[v] = Part::kBH;
  for (Vertex v : bl) part_of[v] = Part::kBL;
  for (const auto& q : cliques) {
    for (Vertex v : q.members) {
      part_of[v] = Part::kClique;
      clique_of[v] = q.id;
    }
    for (Vertex v : q.all) all_of[v].push_back(q.id);
    for (Vertex v : q.big_plus) big_of[v].push_back(q.id);
  }
}

bool Decomposition::in_all(Vertex v, int clique_id) const {
  return contains_int(all_of[v], clique_id);
}

bool Decomposition::in_big(Vertex v, int clique_id) const {
  return contains_int(big_of[v], clique_id);
}

bool Decomposition::cc_external(Vertex v, int clique_id) const {
  return clique_of[v] != clique_id && !in_all(v, clique_id) &&
         !in_big(v, clique_id);
}

bool Decomposition::external(Vertex v, int clique_id) const {
  return clique_of[v] != clique_id && !in_all(v, clique_id);
}

std::vector<int> Decomposition::clique_ids(Tier t) const {
  std::vector<int> out;
  for (const auto& q : cliques)
    if (q.tier == t) out.push_back(q.id);
  return out;
}

nlohmann::json ValidationReport::to_json() const {
  nlohmann::json j;
  j["passed"] = passed;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : violations) {
    j["violations"].push_back({{"rule", v.rule},
                               {"witness", v.witness},
                               {"measured", v.measured},
                               {"bound", v.bound}});
  }
  return j;
}

std::vector<Vertex> external_neighbors(Vertex v, const CliqueInfo& clique,
                                       const Graph& graph) {
  if (!sorted_contains(clique.members, v))
    throw DomainError("external_neighbors: vertex not in clique");
  std::vector<Vertex> out;
  for (Vertex u : graph.neighbors(v)) {
    if (!sorted_contains(clique.members, u) &&
        !sorted_contains(clique.all, u))
      out.push_back(u);
  }
  return out;
}

std::vector<Vertex> compute_big_plus(const Graph& graph,
                                     const Decomposition& d, int clique_id,
                                     const AnalysisConstants& k) {
  const auto& q = d.cliques[clique_id];
  const double threshold = k.big_plus_threshold(graph.delta());
  // Candidates are neighbors of members; others cannot have edges into A_i.
  std::vector<int> into(graph.n(), 0);
  for (Vertex m : q.members)
    for (Vertex u : graph.neighbors(m)) ++into[u];
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph.n(); ++v) {
    if (into[v] >= threshold && !sorted_contains(q.members, v) &&
        !sorted_contains(q.all, v))
      out.push_back(v);
  }
  return out;
}

ValidationReport validate(const Graph& graph, const Decomposition& d, int c,
                          const AnalysisConstants& k) {
  ValidationReport rep;
  const int n = graph.n();
  const int delta = graph.delta();
  auto fail = [&rep](std::string rule, std::vector<Vertex> witness,
                     double measured, double bound) {
    rep.violations.push_back(
        {std::move(rule), std::move(witness), measured, bound});
  };

  // Structural partition check runs first; rule checks assume it.
  {
    std::vector<int> seen(n, 0);
    for (Vertex v : d.s) ++seen[v];
    for (Vertex v : d.bh) ++seen[v];
    for (Vertex v : d.bl) ++seen[v];
    for (const auto& q : d.cliques)
      for (Vertex v : q.members) ++seen[v];
    for (Vertex v = 0; v < n; ++v) {
      if (seen[v] != 1) {
        fail("partition", {v}, seen[v], 1);
      }
    }
    for (const auto& q : d.cliques) {
      for (Vertex v : q.all) {
        if (!sorted_contains(d.bh, v) && !sorted_contains(d.bl, v))
          fail("all.in-b", {v}, 0, 0);
      }
    }
    if (!rep.violations.empty()) {
      rep.passed = false;
      return rep;
    }
  }

  Decomposition dx = d;
  dx.build_index(n);

  // (1) sparse vertices: low degree, or bounded degree with many non-edges.
  const double heavy = k.s_heavy_threshold(delta);
  const double nonedge_bound = k.s_nonedge_bound(delta);
  for (Vertex v : d.s) {
    int deg_s = 0;
    std::vector<Vertex> nbrs;
    for (Vertex u : graph.neighbors(v)) {
      if (dx.part_of[u] == Part::kS) {
        ++deg_s;
        nbrs.push_back(u);
      }
    }
    if (deg_s < heavy) continue;
    if (deg_s > delta) {
      fail("s.degree-cap", {v}, deg_s, delta);
      continue;
    }
    std::int64_t nonedges = 0;
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        if (!graph.has_edge(nbrs[i], nbrs[j])) ++nonedges;
    if (static_cast<double>(nonedges) < nonedge_bound)
      fail("s.sparse", {v}, static_cast<double>(nonedges), nonedge_bound);
  }

  // (2) B_H: bounded neighbor count outside the cliques.
  const double bh_bound = k.bh_outside_bound(delta, c);
  for (Vertex v : d.bh) {
    int outside = 0;
    for (Vertex u : graph.neighbors(v))
      if (dx.part_of[u] != Part::kClique) ++outside;
    if (!(outside < bh_bound)) fail("bh.list", {v}, outside, bh_bound);
  }

  // (4) B_L: some A_i in A_L leaves the vertex a large enough list.
  const double bl_bound = k.bl_outside_bound(delta, c);
  const auto low_ids = dx.clique_ids(Tier::L);
  for (Vertex v : d.bl) {
    bool ok = false;
    double best = graph.degree(v);
    for (int i : low_ids) {
      int outside = 0;
      for (Vertex u : graph.neighbors(v))
        if (dx.clique_of[u] != i) ++outside;
      best = std::min(best, double(outside));
      if (outside <= bl_bound) {
        ok = true;
        break;
      }
    }
    if (!ok) fail("bl.list", {v}, best, bl_bound);
  }

  // (a)-(c) and external degrees per clique.
  const double min_size = k.clique_min_size(delta, c);
  const double big_cap = k.big_plus_degree_cap(delta);
  for (const auto& q : d.cliques) {
    if (q.members.size() > static_cast<std::size_t>(c) ||
        static_cast<double>(q.members.size()) < min_size)
      fail("clique.a.size", {q.members.empty() ? -1 : q.members[0]},
           static_cast<double>(q.members.size()), min_size);
    for (std::size_t i = 0; i < q.members.size(); ++i) {
      for (std::size_t j = i + 1; j < q.members.size(); ++j) {
        if (!graph.has_edge(q.members[i], q.members[j])) {
          fail("clique.a.complete", {q.members[i], q.members[j]}, 0, 1);
        }
      }
    }
    if (static_cast<int>(q.all.size()) !=
        c - static_cast<int>(q.members.size()))
      fail("clique.b.all-size", {q.members.empty() ? -1 : q.members[0]},
           static_cast<double>(q.all.size()),
           static_cast<double>(c - static_cast<int>(q.members.size())));
    for (Vertex v : q.all) {
      for (Vertex m : q.members) {
        if (!graph.has_edge(v, m)) {
          fail("clique.b.all-adjacent", {v, m}, 0, 1);
          break;
        }
      }
    }
    // Big+ is computed, not declared: the declared set must match the scan.
    auto computed = compute_big_plus(graph, dx, q.id, k);
    if (computed != q.big_plus) {
      fail("clique.c.big-mismatch", computed, computed.size(),
           q.big_plus.size());
    }
    for (std::size_t i = 0; i < q.big_plus.size(); ++i) {
      for (std::size_t j = i + 1; j < q.big_plus.size(); ++j) {
        if (!graph.has_edge(q.big_plus[i], q.big_plus[j]))
          fail("clique.c.big-clique", {q.big_plus[i], q.big_plus[j]}, 0, 1);
      }
    }
    for (Vertex v : q.big_plus) {
      int into = 0;
      for (Vertex u : graph.neighbors(v))
        if (dx.clique_of[u] == q.id) ++into;
      if (into > big_cap) fail("clique.c.big-degree", {v}, into, big_cap);
    }
    // External degree bound per tier; uses Big+-independent definition.
    const double ext_bound =
        q.tier == Tier::H ? k.ext_bound_h(delta) : k.ext_bound_l(delta);
    const char* rule = q.tier == Tier::H ? "ext.h" : "ext.l";
    for (Vertex m : q.members) {
      int ext = 0;
      for (Vertex u : graph.neighbors(m))
        if (dx.external(u, q.id)) ++ext;
      if (ext > ext_bound) fail(rule, {m}, ext, ext_bound);
    }
  }

  rep.passed = rep.violations.empty();
  return rep;
}

namespace {

std::vector<Vertex> parse_vertices(std::istringstream& in) {
  std::vector<Vertex> out;
  Vertex v;
  while (in >> v) out.push_back(v);
  return out;
}

}  // namespace

Decomposition read_decomposition(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw DomainError("read_decomposition: cannot open " + path);
  Decomposition d;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "S") {
      d.s = parse_vertices(ls);
    } else if (tag == "BH") {
      d.bh = parse_vertices(ls);
    } else if (tag == "BL") {
      d.bl = parse_vertices(ls);
    } else if (tag == "AH" || tag == "AL") {
      CliqueInfo q;
      q.tier = (tag == "AH") ? Tier::H : Tier::L;
      std::string idtok;
      ls >> idtok;
      if (!idtok.empty() && idtok.back() == ':') idtok.pop_back();
      q.id = std::stoi(idtok);
      std::string rest;
      std::getline(ls, rest);
      std::vector<std::string> sections;
      std::size_t start = 0;
      for (;;) {
        auto bar = rest.find('|', start);
        sections.push_back(rest.substr(
            start, bar == std::string::npos ? std::string::npos : bar - start));
        if (bar == std::string::npos) break;
        start = bar + 1;
      }
      if (sections.size() != 3)
        throw DomainError("read_decomposition: clique line needs 3 sections");
      auto parse = [](const std::string& sec) {
        std::istringstream ss(sec);
        return parse_vertices(ss);
      };
      q.members = parse(sections[0]);
      q.all = parse(sections[1]);
      q.big_plus = parse(sections[2]);
      d.cliques.push_back(std::move(q));
    } else {
      throw DomainError("read_decomposition: unknown tag " + tag);
    }
  }
  std::sort(d.cliques.begin(), d.cliques.end(),
            [](const CliqueInfo& a, const CliqueInfo& b) { return a.id < b.id; });
  d.build_index(n);
  return d;
}

void write_decomposition(const std::string& path, const Decomposition& d) {
  std::ofstream out(path);
  if (!out) throw DomainError("write_decomposition: cannot open " + path);
  auto emit = [&out](const char* tag, const std::vector<Vertex>& vs) {
    out << tag;
    for (Vertex v : vs) out << ' ' << v;
    out << '\n';
  };
  emit("S", d.s);
  emit("BH", d.bh);
  emit("BL", d.bl);
  for (const auto& q : d.cliques) {
    out << (q.tier == Tier::H ? "AH " : "AL ") << q.id << ':';
    for (Vertex v : q.members) out << ' ' << v;
    out << " |";
    for (Vertex v : q.all) out << ' ' << v;
    out << " |";
    for (Vertex v : q.big_plus) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace dkc
