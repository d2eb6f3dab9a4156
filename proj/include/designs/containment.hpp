#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "designs/block_set.hpp"

namespace designs {

// Bipartite graph given by adjacency lists of the left side.
struct BipartiteGraph {
  int n_left = 0;
  int n_right = 0;
  std::vector<std::vector<int>> adj;  // adj[u] sorted ascending

  long long edge_count() const;
  std::vector<int> left_degrees() const;
  std::vector<int> right_degrees() const;
};

// Bipartite containment graph between two block families over the same
// host: left i ~ right j iff right[j] is a proper subgraph of left[i]
// (equal edge sets are not adjacent).
struct ContainmentGraph {
  std::vector<LabeledGraph> left;   // sorted by canonical key
  std::vector<LabeledGraph> right;  // sorted by canonical key
  BipartiteGraph graph;
  // Set by biregular_degrees: every left degree d, every right degree e.
  std::optional<std::pair<long long, long long>> degrees;
};

ContainmentGraph build_containment(const BlockSet& A, const BlockSet& B);

// Constant side degrees (d, e); throws NotBiregular otherwise.  The
// handshake d*|left| = e*|right| is asserted.  Degrees are cached on cg.
std::pair<long long, long long> biregular_degrees(ContainmentGraph& cg);

// a interchangeable copies of each left vertex and b of each right one.
// Replicated vertex (i, c) gets index i*a + c (resp. j*b + c), so base
// indices are recovered by division.
struct ReplicatedGraph {
  const ContainmentGraph* base = nullptr;
  long long a = 1;
  long long b = 1;

  long long left_size() const;
  long long right_size() const;
  BipartiteGraph to_bipartite() const;
};

// Replication sizes are capped to keep the expansion materializable.
ReplicatedGraph replicate(const ContainmentGraph& cg, long long a,
                          long long b);

// Base containment adjacency recovered from a replicated graph's edges;
// used to check that replication preserves adjacency exactly.
BipartiteGraph collapse(const ReplicatedGraph& rg);

}  // namespace designs
