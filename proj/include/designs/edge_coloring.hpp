#pragma once

#include <vector>

#include "designs/containment.hpp"

namespace designs {

// A proper edge coloring; color_of[u][k] colors the edge from left u to
// g.adj[u][k].  Colors are 0-based.
struct EdgeColoring {
  int num_colors = 0;
  std::vector<std::vector<int>> color_of;

  int color(const BipartiteGraph& g, int u, int v) const;
};

// Proper edge coloring of a simple bipartite graph with exactly
// max-degree colors, by alternating-path recoloring.  Edges are
// processed in fixed order, smallest available color first, so the
// coloring is reproducible.
EdgeColoring bipartite_edge_coloring(const BipartiteGraph& g);

bool is_proper_coloring(const BipartiteGraph& g, const EdgeColoring& c);

}  // namespace designs
