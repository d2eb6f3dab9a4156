#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace designs {

class PermutationGroup;

// A finite simple graph on vertices 0..n-1, stored as a sorted list of
// edges (u, v) with u < v.  Two graphs are equal iff they have the same
// vertex count and the same edge set, so a graph drawn inside a larger
// host (n = host order, edges = the copy) is a value usable as a block.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(int n, std::vector<std::pair<int, int>> edges);

  int order() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int u, int v) const;
  std::vector<int> degrees() const;
  // Vertices of nonzero degree, ascending.
  std::vector<int> support() const;
  // Same edge set on a smaller vertex range: n shrinks to max endpoint + 1.
  LabeledGraph trimmed() const;
  // Support relabeled onto 0..s-1, order preserved; drops isolated
  // vertices entirely.  Blocks are edge sets, so patterns are
  // interchangeable with their compactions.
  LabeledGraph compacted() const;

  auto operator<=>(const LabeledGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

// Total-order byte encoding of (n, edge set).  Keys compare the same way
// as the graphs themselves; equal keys iff equal graphs.  Requires all
// vertex labels < 256.
struct CanonicalKey {
  std::string bytes;
  auto operator<=>(const CanonicalKey&) const = default;
};

CanonicalKey canonical_key(const LabeledGraph& g);

struct CanonicalKeyHash {
  size_t operator()(const CanonicalKey& k) const {
    return std::hash<std::string>{}(k.bytes);
  }
};

LabeledGraph complete_graph(int k);
LabeledGraph cycle_graph(int k);                       // k >= 3
LabeledGraph path_graph(int h);                        // h >= 2 vertices
LabeledGraph star_graph(int order);                    // centre 0, order >= 2
LabeledGraph wheel_graph(int order);                   // rim 0..m-1, hub m; order >= 4
// The complete-graph block on a vertex subset of a host on n vertices.
LabeledGraph subset_block(int n, std::vector<int> vertices);
// Cycle block through the given vertex sequence inside a host on n vertices.
LabeledGraph cycle_block(int n, const std::vector<int>& vertices);
// Path block through the given vertex sequence inside a host on n vertices.
LabeledGraph path_block(int n, const std::vector<int>& vertices);
// Star block with the given centre and leaves inside a host on n vertices.
LabeledGraph star_block(int n, int centre, const std::vector<int>& leaves);

// Label-identity containment: every edge of a is an edge of b.  Requires
// a.order() <= b.order().
bool is_subgraph(const LabeledGraph& a, const LabeledGraph& b);

// Isomorphism of graphs of equal order.
bool is_isomorphic(const LabeledGraph& a, const LabeledGraph& b);

// Whether host contains some subgraph isomorphic to pattern.  Isolated
// vertices of pattern are immaterial (blocks are edge sets); host only
// needs order >= pattern.order() when pattern has isolated vertices.
bool has_copy(const LabeledGraph& host, const LabeledGraph& pattern);

// All subgraphs of host isomorphic to pattern, identified by edge set,
// sorted by canonical key.  Output graphs carry n = host.order().
std::vector<LabeledGraph> enumerate_copies(const LabeledGraph& host,
                                           const LabeledGraph& pattern);

// Full automorphism group of g, materialized.  Throws when g.order()
// exceeds max_order or the group would be too large to hold.
PermutationGroup graph_automorphisms(const LabeledGraph& g,
                                     int max_order = 16);

// Number of injective vertex maps pattern -> host realizing pattern as a
// subgraph (edge-preserving on pattern's support, distinct images).
long long count_injective_copies(const LabeledGraph& host,
                                 const LabeledGraph& pattern);

}  // namespace designs
