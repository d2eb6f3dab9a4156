#include "designs/nesting.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "designs/errors.hpp"

namespace designs {

namespace {

bool is_m_cycle(const LabeledGraph& g, int m) {
  if (g.edge_count() != m) return false;
  const std::vector<int> degs = g.degrees();
  int on = 0;
  for (int d : degs) {
    if (d != 0 && d != 2) return false;
    if (d == 2) ++on;
  }
  if (on != m) return false;
  // Degrees force disjoint cycles; equal edge and vertex counts with a
  // single walk closing confirms connectivity.
  return static_cast<int>(cycle_vertices(g).size()) == m;
}

void validate(const CycleSystem& cs) {
  if (cs.m < 3) throw Error("cycle length must be at least 3");
  if (cs.n < cs.m) throw Error("host too small for the cycle length");
  std::map<std::pair<int, int>, int> rim_tally;
  for (const LabeledGraph& c : cs.cycles) {
    if (c.order() != cs.n)
      throw Error("cycle drawn in the wrong host order");
    if (!is_m_cycle(c, cs.m))
      throw Error("block is not a single " + std::to_string(cs.m) +
                  "-cycle");
    for (const auto& [u, v] : c.edges()) ++rim_tally[{u, v}];
  }
  bool partition =
      rim_tally.size() == static_cast<size_t>(cs.n) * (cs.n - 1) / 2;
  for (const auto& [edge, count] : rim_tally)
    partition = partition && count == 1;
  if (!partition) throw Error("cycles do not partition the host edges");
}

}  // namespace

BlockSet CycleSystem::to_block_set() const {
  BlockSet bs;
  bs.host = complete_graph(n);
  bs.blocks = cycles;
  std::sort(bs.blocks.begin(), bs.blocks.end());
  return bs;
}

std::vector<int> cycle_vertices(const LabeledGraph& cycle) {
  const std::vector<int> support = cycle.support();
  if (support.empty()) throw Error("empty graph has no cycle walk");
  std::vector<std::vector<int>> nbr(cycle.order());
  for (const auto& [u, v] : cycle.edges()) {
    nbr[u].push_back(v);
    nbr[v].push_back(u);
  }
  const int start = support.front();
  if (nbr[start].size() != 2) throw Error("walk start has degree != 2");
  std::vector<int> walk{start, std::min(nbr[start][0], nbr[start][1])};
  while (true) {
    const int at = walk.back();
    const int prev = walk[walk.size() - 2];
    if (nbr[at].size() != 2) throw Error("walk hits degree != 2");
    const int next = nbr[at][0] == prev ? nbr[at][1] : nbr[at][0];
    if (next == start) break;
    walk.push_back(next);
  }
  return walk;
}

NestingReport verify_nesting(const CycleSystem& cs,
                             const NestingAssignment& f) {
  NestingReport report;
  validate(cs);
  if (f.hubs.size() != cs.cycles.size()) {
    report.detail = "hub count differs from cycle count";
    return report;
  }
  std::map<std::pair<int, int>, int> tally;
  for (size_t i = 0; i < cs.cycles.size(); ++i) {
    const int hub = f.hubs[i];
    if (hub < 0 || hub >= cs.n) {
      report.detail = "hub out of range at cycle " + std::to_string(i);
      return report;
    }
    bool clash = false;
    for (const auto& [u, v] : cs.cycles[i].edges())
      clash = clash || u == hub || v == hub;
    if (clash) {
      report.detail = "hub lies on its own cycle at index " +
                      std::to_string(i);
      return report;
    }
    for (int x : cs.cycles[i].support())
      ++tally[{std::min(hub, x), std::max(hub, x)}];
  }
  for (int u = 0; u < cs.n; ++u)
    for (int v = u + 1; v < cs.n; ++v) {
      const auto it = tally.find({u, v});
      const int count = it == tally.end() ? 0 : it->second;
      if (count != 1) report.defects.push_back({u, v, count});
    }
  if (!report.defects.empty()) {
    std::ostringstream os;
    os << report.defects.size() << " star edges off count";
    report.detail = os.str();
    return report;
  }
  report.ok = true;
  report.detail = "nesting valid";
  return report;
}

BlockSet WheelDesign::to_block_set() const {
  BlockSet bs;
  bs.host = complete_graph(n);
  bs.multiplicity = 2;
  for (const WheelBlock& w : wheels) bs.blocks.push_back(w.graph);
  std::sort(bs.blocks.begin(), bs.blocks.end());
  return bs;
}

WheelConstruction wheels_from_nesting(const CycleSystem& cs,
                                      const NestingAssignment& f) {
  const NestingReport report = verify_nesting(cs, f);
  if (!report.ok) throw Error("invalid nesting: " + report.detail);

  WheelConstruction out;
  out.wheels.n = cs.n;
  out.wheels.m = cs.m;
  std::vector<LabeledGraph> star_blocks;
  for (size_t i = 0; i < cs.cycles.size(); ++i) {
    std::vector<std::pair<int, int>> edges = cs.cycles[i].edges();
    const int hub = f.hubs[i];
    for (int x : cs.cycles[i].support())
      edges.emplace_back(std::min(hub, x), std::max(hub, x));
    out.wheels.wheels.push_back({LabeledGraph(cs.n, std::move(edges)), hub});
    star_blocks.push_back(star_block(cs.n, hub, cs.cycles[i].support()));
  }
  std::sort(out.wheels.wheels.begin(), out.wheels.wheels.end());

  const BlockSet wheel_set = out.wheels.to_block_set();
  const DesignReport dr = verify_design(wheel_set);
  if (!dr.ok || dr.multiplicity != 2)
    throw Error("wheel blocks do not cover every edge twice: " +
                dr.summary());

  out.star_design.host = complete_graph(cs.n);
  out.star_design.blocks = star_blocks;
  std::sort(out.star_design.blocks.begin(), out.star_design.blocks.end());

  // Both samplings read off the sorted wheel order.
  out.to_cycles.source = wheel_set;
  out.to_cycles.target = cs.to_block_set();
  out.to_stars.source = wheel_set;
  out.to_stars.target = out.star_design;
  for (const WheelBlock& w : out.wheels.wheels) {
    std::vector<std::pair<int, int>> rim;
    std::vector<int> leaves;
    for (const auto& [u, v] : w.graph.edges()) {
      if (u == w.hub || v == w.hub)
        leaves.push_back(u == w.hub ? v : u);
      else
        rim.emplace_back(u, v);
    }
    const LabeledGraph cycle(cs.n, std::move(rim));
    const LabeledGraph star = star_block(cs.n, w.hub, leaves);
    const auto cycle_at = std::lower_bound(out.to_cycles.target.blocks.begin(),
                                           out.to_cycles.target.blocks.end(),
                                           cycle);
    const auto star_at = std::lower_bound(out.to_stars.target.blocks.begin(),
                                          out.to_stars.target.blocks.end(),
                                          star);
    assert(cycle_at != out.to_cycles.target.blocks.end() && *cycle_at == cycle);
    assert(star_at != out.to_stars.target.blocks.end() && *star_at == star);
    out.to_cycles.assignment.push_back(
        static_cast<int>(cycle_at - out.to_cycles.target.blocks.begin()));
    out.to_stars.assignment.push_back(
        static_cast<int>(star_at - out.to_stars.target.blocks.begin()));
  }
  verify_sampling(out.to_cycles);
  verify_sampling(out.to_stars);
  return out;
}

std::pair<CycleSystem, NestingAssignment> nesting_from_sampling(
    const WheelDesign& wd, const SamplingMap& xi) {
  if (wd.wheels.empty()) return {CycleSystem{wd.n, wd.m, {}}, {}};
  const auto profile = verify_sampling(xi);
  if (profile.max != 1)
    throw Error("recovery needs a bijective sampling onto the stars");
  if (xi.source.blocks.size() != wd.wheels.size())
    throw Error("sampling source differs from the wheel design");

  CycleSystem cs;
  cs.n = wd.n;
  cs.m = wd.m;
  NestingAssignment f;
  for (const WheelBlock& w : wd.wheels) {
    const auto at = std::lower_bound(xi.source.blocks.begin(),
                                     xi.source.blocks.end(), w.graph);
    if (at == xi.source.blocks.end() || *at != w.graph)
      throw Error("wheel missing from the sampling source");
    const size_t i = at - xi.source.blocks.begin();
    const LabeledGraph& star = xi.target.blocks[xi.assignment[i]];

    // Hub = the star centre: degree equal to the edge count and absent
    // from the remaining cycle.  At most one vertex can qualify.
    std::vector<int> degs = star.degrees();
    std::vector<std::pair<int, int>> rim;
    for (const auto& [u, v] : w.graph.edges())
      if (!star.has_edge(u, v)) rim.emplace_back(u, v);
    const LabeledGraph cycle(wd.n, std::move(rim));
    int hub = -1;
    for (int x : star.support())
      if (degs[x] == star.edge_count() && cycle.degrees()[x] == 0) hub = x;
    if (hub == -1)
      throw Error("sampled star has no centre off the remaining cycle");
    if (!is_m_cycle(cycle, wd.m))
      throw Error("wheel minus its star is not a single " +
                  std::to_string(wd.m) + "-cycle");
    cs.cycles.push_back(cycle);
    f.hubs.push_back(hub);
  }
  const NestingReport report = verify_nesting(cs, f);
  if (!report.ok) throw Error("recovered nesting invalid: " + report.detail);
  return {std::move(cs), std::move(f)};
}

NestingSearchResult search_nesting(const CycleSystem& cs, long long budget) {
  // Cheap rejection first: the stars contribute m edges per cycle, so a
  // nesting needs m * |cycles| = C(n, 2) before anything else.
  const long long pairs = static_cast<long long>(cs.n) * (cs.n - 1) / 2;
  if (static_cast<long long>(cs.m) * static_cast<long long>(cs.cycles.size()) !=
      pairs)
    throw Error("edge count rules out a nesting: " + std::to_string(cs.m) +
                " * " + std::to_string(cs.cycles.size()) +
                " != " + std::to_string(pairs));
  validate(cs);
  NestingSearchResult result;

  // uncovered[u][v]: K_n edges still needing a star edge.
  std::vector<std::vector<bool>> uncovered(cs.n, std::vector<bool>(cs.n, true));
  std::vector<std::vector<int>> supports;
  std::vector<std::vector<bool>> on_cycle;
  for (const LabeledGraph& c : cs.cycles) {
    supports.push_back(c.support());
    std::vector<bool> on(cs.n, false);
    for (int x : supports.back()) on[x] = true;
    on_cycle.push_back(std::move(on));
  }

  std::vector<int> hubs(cs.cycles.size(), -1);
  long long nodes = 0;
  bool out_of_budget = false;

  const auto feasible = [&](size_t i, int hub) {
    if (on_cycle[i][hub]) return false;
    for (int x : supports[i])
      if (!uncovered[std::min(hub, x)][std::max(hub, x)]) return false;
    return true;
  };
  const auto place = [&](size_t i, int hub, bool value) {
    for (int x : supports[i])
      uncovered[std::min(hub, x)][std::max(hub, x)] = value;
  };

  const auto search = [&](auto&& self, size_t i) -> bool {
    if (i == cs.cycles.size()) return true;
    for (int hub = 0; hub < cs.n; ++hub) {
      if (++nodes > budget) {
        out_of_budget = true;
        return false;
      }
      if (!feasible(i, hub)) continue;
      place(i, hub, false);
      hubs[i] = hub;
      if (self(self, i + 1)) return true;
      place(i, hub, true);
      hubs[i] = -1;
      if (out_of_budget) return false;
    }
    return false;
  };

  const bool found = search(search, 0);
  result.nodes = nodes;
  if (found) {
    result.status = SearchStatus::found;
    result.nesting = NestingAssignment{hubs};
    assert(verify_nesting(cs, *result.nesting).ok);
  } else {
    result.status = out_of_budget ? SearchStatus::budget_exceeded
                                  : SearchStatus::none_exists;
  }
  return result;
}

}  // namespace designs
