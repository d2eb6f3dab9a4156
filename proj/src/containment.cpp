#include "designs/containment.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "designs/errors.hpp"

namespace designs {

long long BipartiteGraph::edge_count() const {
  long long total = 0;
  for (const auto& list : adj) total += static_cast<long long>(list.size());
  return total;
}

std::vector<int> BipartiteGraph::left_degrees() const {
  std::vector<int> deg(n_left);
  for (int u = 0; u < n_left; ++u) deg[u] = static_cast<int>(adj[u].size());
  return deg;
}

std::vector<int> BipartiteGraph::right_degrees() const {
  std::vector<int> deg(n_right, 0);
  for (const auto& list : adj)
    for (int v : list) ++deg[v];
  return deg;
}

namespace {

// Blocks as bitmasks over the host's edge list; containment tests
// become word operations.
struct EdgeMasks {
  int words = 0;
  std::vector<std::vector<uint64_t>> mask;

  EdgeMasks(const LabeledGraph& host, const std::vector<LabeledGraph>& blocks) {
    std::map<std::pair<int, int>, int> slot;
    int next = 0;
    for (const auto& e : host.edges()) slot[e] = next++;
    words = (next + 63) / 64;
    mask.assign(blocks.size(), std::vector<uint64_t>(words, 0));
    for (size_t i = 0; i < blocks.size(); ++i)
      for (const auto& e : blocks[i].edges()) {
        const auto it = slot.find(e);
        if (it == slot.end())
          throw Error("block is not a subgraph of the host");
        mask[i][it->second / 64] |= 1ULL << (it->second % 64);
      }
  }
};

bool proper_subset(const std::vector<uint64_t>& small,
                   const std::vector<uint64_t>& big) {
  bool equal = true;
  for (size_t w = 0; w < small.size(); ++w) {
    if (small[w] & ~big[w]) return false;
    if (small[w] != big[w]) equal = false;
  }
  return !equal;
}

std::vector<LabeledGraph> sorted_blocks(const BlockSet& bs) {
  std::vector<LabeledGraph> blocks = bs.blocks;
  std::sort(blocks.begin(), blocks.end());
  if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end())
    throw Error("duplicate block");
  return blocks;
}

}  // namespace

ContainmentGraph build_containment(const BlockSet& A, const BlockSet& B) {
  if (A.host != B.host) throw Error("containment needs a common host");
  ContainmentGraph cg;
  cg.left = sorted_blocks(A);
  cg.right = sorted_blocks(B);
  // Both constructions also validate that every block sits in the host.
  const EdgeMasks left_masks(A.host, cg.left);
  const EdgeMasks right_masks(A.host, cg.right);

  cg.graph.n_left = static_cast<int>(cg.left.size());
  cg.graph.n_right = static_cast<int>(cg.right.size());
  cg.graph.adj.assign(cg.left.size(), {});
  for (size_t i = 0; i < cg.left.size(); ++i)
    for (size_t j = 0; j < cg.right.size(); ++j)
      if (proper_subset(right_masks.mask[j], left_masks.mask[i]))
        cg.graph.adj[i].push_back(static_cast<int>(j));
  return cg;
}

std::pair<long long, long long> biregular_degrees(ContainmentGraph& cg) {
  const auto left = cg.graph.left_degrees();
  const auto right = cg.graph.right_degrees();
  for (size_t i = 1; i < left.size(); ++i)
    if (left[i] != left[0])
      throw NotBiregular("left degrees differ: block " + std::to_string(i) +
                         " has " + std::to_string(left[i]) + ", block 0 has " +
                         std::to_string(left[0]));
  for (size_t j = 1; j < right.size(); ++j)
    if (right[j] != right[0])
      throw NotBiregular("right degrees differ: block " + std::to_string(j) +
                         " has " + std::to_string(right[j]) +
                         ", block 0 has " + std::to_string(right[0]));
  const long long d = left.empty() ? 0 : left[0];
  const long long e = right.empty() ? 0 : right[0];
  assert(d * static_cast<long long>(left.size()) ==
         e * static_cast<long long>(right.size()));
  cg.degrees = {d, e};
  return {d, e};
}

long long ReplicatedGraph::left_size() const {
  return a * static_cast<long long>(base->graph.n_left);
}

long long ReplicatedGraph::right_size() const {
  return b * static_cast<long long>(base->graph.n_right);
}

BipartiteGraph ReplicatedGraph::to_bipartite() const {
  BipartiteGraph g;
  g.n_left = static_cast<int>(left_size());
  g.n_right = static_cast<int>(right_size());
  g.adj.assign(g.n_left, {});
  for (int i = 0; i < base->graph.n_left; ++i) {
    std::vector<int> row;
    row.reserve(base->graph.adj[i].size() * b);
    for (int j : base->graph.adj[i])
      for (long long cb = 0; cb < b; ++cb)
        row.push_back(static_cast<int>(j * b + cb));
    for (long long ca = 0; ca < a; ++ca) g.adj[i * a + ca] = row;
  }
  return g;
}

ReplicatedGraph replicate(const ContainmentGraph& cg, long long a,
                          long long b) {
  if (a < 1 || b < 1) throw Error("replication factors must be positive");
  constexpr long long kMaxSide = 2000000;
  constexpr long long kMaxEdges = 50000000;
  const long long left = a * cg.graph.n_left;
  const long long right = b * cg.graph.n_right;
  if (left > kMaxSide || right > kMaxSide ||
      a * b * cg.graph.edge_count() > kMaxEdges)
    throw Error("replication too large to materialize");
  return ReplicatedGraph{&cg, a, b};
}

BipartiteGraph collapse(const ReplicatedGraph& rg) {
  const BipartiteGraph expanded = rg.to_bipartite();
  std::vector<std::set<int>> base(rg.base->graph.n_left);
  for (int u = 0; u < expanded.n_left; ++u)
    for (int v : expanded.adj[u])
      base[u / rg.a].insert(static_cast<int>(v / rg.b));
  BipartiteGraph g;
  g.n_left = rg.base->graph.n_left;
  g.n_right = rg.base->graph.n_right;
  g.adj.assign(g.n_left, {});
  for (int u = 0; u < g.n_left; ++u)
    g.adj[u] = {base[u].begin(), base[u].end()};
  return g;
}

}  // namespace designs
