#include "designs/report.hpp"

#include <algorithm>
#include <sstream>

namespace designs {

namespace {

// Path walk from the smaller endpoint; empty when the graph is not a
// single nonempty path.
std::vector<int> path_walk(const LabeledGraph& g) {
  if (g.edge_count() == 0) return {};
  std::vector<std::vector<int>> nbr(g.order());
  for (const auto& [u, v] : g.edges()) {
    nbr[u].push_back(v);
    nbr[v].push_back(u);
  }
  std::vector<int> ends;
  for (int x : g.support()) {
    if (nbr[x].size() > 2) return {};
    if (nbr[x].size() == 1) ends.push_back(x);
  }
  if (ends.size() != 2) return {};
  std::vector<int> walk{ends[0], nbr[ends[0]][0]};
  while (nbr[walk.back()].size() == 2) {
    const int prev = walk[walk.size() - 2];
    const auto& at = nbr[walk.back()];
    walk.push_back(at[0] == prev ? at[1] : at[0]);
  }
  if (static_cast<int>(walk.size()) != g.edge_count() + 1) return {};
  return walk;
}

std::vector<int> display_order(const LabeledGraph& g) {
  const std::vector<int> walk = path_walk(g);
  if (!walk.empty()) return walk;
  // Star: centre first, leaves ascending.
  const std::vector<int> degs = g.degrees();
  for (int x : g.support())
    if (degs[x] == g.edge_count() && g.edge_count() >= 2) {
      std::vector<int> out{x};
      for (int y : g.support())
        if (y != x) out.push_back(y);
      return out;
    }
  return g.support();
}

void append_vertices(std::ostringstream& os, const std::vector<int>& list) {
  for (size_t i = 0; i < list.size(); ++i) {
    if (i > 0) os << ' ';
    os << list[i];
  }
}

}  // namespace

std::string render_row(const LabeledGraph& block, const LabeledGraph& image) {
  std::ostringstream os;
  os << '[';
  append_vertices(os, display_order(image));
  os << ']';
  std::vector<int> in_image(block.order(), 0);
  for (int x : image.support()) in_image[x] = 1;
  for (int x : block.support())
    if (!in_image[x]) os << ' ' << x;
  return os.str();
}

std::string report(const SamplingMap& sm) {
  const RedundancyProfile profile = verify_sampling(sm);
  std::ostringstream os;
  os << "sampling of " << sm.source.blocks.size() << " blocks onto "
     << sm.target.blocks.size() << " targets: " << profile.summary() << "\n";
  return os.str();
}

std::string report(const LiftedSampling& ls) {
  std::ostringstream os;
  os << "lifted sampling over " << to_string(ls.group.kind()) << " group of "
     << "order " << ls.group.order() << ": " << ls.big.orbit_count()
     << " block orbits onto " << ls.small.orbit_count()
     << " image orbits, redundancy " << ls.redundancy << "\n";
  for (long long u = 0; u < ls.small.orbit_count(); ++u) {
    os << "image orbit ";
    append_vertices(
        os, display_order(ls.small.objects[ls.small.representative[u]]));
    os << ":\n";
    for (long long o = 0; o < ls.big.orbit_count(); ++o) {
      const int si = ls.small.find(ls.rep_image[o]);
      if (ls.small.orbit_of[si] != u) continue;
      os << "  "
         << render_row(ls.big.objects[ls.big.representative[o]],
                       ls.rep_image[o])
         << "\n";
    }
  }
  return os.str();
}

std::string report(const TripleStarter& ts) {
  std::ostringstream os;
  os << "triple starter n=" << ts.n << ": lambda=" << ts.lambda
     << ", v=" << ts.v << "\n";
  const auto family = [&os](const char* name,
                            const std::vector<std::array<int, 3>>& rows) {
    if (rows.empty()) return;
    os << name << ":";
    for (const auto& t : rows)
      os << " [" << t[0] << ' ' << t[1] << "] " << t[2];
    os << "\n";
  };
  family("T1", ts.t1);
  family("T2", ts.t2);
  family("T3", ts.t3);
  family(ts.even ? "T4^2" : "T4^1", ts.t4);
  return os.str();
}

}  // namespace designs
