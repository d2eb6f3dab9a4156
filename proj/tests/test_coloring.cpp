#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "designs/edge_coloring.hpp"

using namespace designs;

namespace {

BipartiteGraph make_graph(int n_left, int n_right,
                          const std::vector<std::pair<int, int>>& edges) {
  BipartiteGraph g;
  g.n_left = n_left;
  g.n_right = n_right;
  g.adj.resize(n_left);
  for (const auto& [u, v] : edges) g.adj[u].push_back(v);
  for (auto& row : g.adj) std::sort(row.begin(), row.end());
  return g;
}

int max_degree(const BipartiteGraph& g) {
  int d = 0;
  for (int x : g.left_degrees()) d = std::max(d, x);
  for (int x : g.right_degrees()) d = std::max(d, x);
  return d;
}

void check_optimal(const BipartiteGraph& g) {
  const EdgeColoring c = bipartite_edge_coloring(g);
  CHECK(is_proper_coloring(g, c));
  CHECK(c.num_colors == max_degree(g));
  for (int u = 0; u < g.n_left; ++u)
    for (size_t k = 0; k < g.adj[u].size(); ++k) {
      CHECK(c.color_of[u][k] >= 0);
      CHECK(c.color_of[u][k] < c.num_colors);
    }
}

}  // namespace

TEST_CASE("small graphs get max-degree colors") {
  check_optimal(make_graph(3, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1},
                                  {1, 2}, {2, 0}, {2, 1}, {2, 2}}));
  // A path alternating sides: two colors suffice.
  check_optimal(make_graph(3, 2, {{0, 0}, {1, 0}, {1, 1}, {2, 1}}));
  // A star from one left vertex: every edge its own color.
  check_optimal(make_graph(1, 5, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  // Single edge and empty graph.
  check_optimal(make_graph(1, 1, {{0, 0}}));
  const EdgeColoring none = bipartite_edge_coloring(make_graph(2, 2, {}));
  CHECK(none.num_colors == 0);
}

TEST_CASE("color lookup by endpoints") {
  const BipartiteGraph g = make_graph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const EdgeColoring c = bipartite_edge_coloring(g);
  CHECK(is_proper_coloring(g, c));
  CHECK(c.num_colors == 2);
  CHECK(c.color(g, 0, 0) != c.color(g, 0, 1));
  CHECK(c.color(g, 0, 0) != c.color(g, 1, 0));
  CHECK(c.color(g, 0, 0) == c.color(g, 1, 1));
}

TEST_CASE("is_proper_coloring rejects clashes") {
  const BipartiteGraph g = make_graph(1, 2, {{0, 0}, {0, 1}});
  EdgeColoring bad;
  bad.num_colors = 2;
  bad.color_of = {{0, 0}};  // both edges at left 0 share a color
  CHECK(!is_proper_coloring(g, bad));
  bad.color_of = {{0, 1}};
  CHECK(is_proper_coloring(g, bad));
}

TEST_CASE("random graphs are colored optimally") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int nl = 1 + static_cast<int>(rng() % 12);
    const int nr = 1 + static_cast<int>(rng() % 12);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < nl; ++u)
      for (int v = 0; v < nr; ++v)
        if (rng() % 3 != 0) edges.emplace_back(u, v);
    if (edges.empty()) continue;
    check_optimal(make_graph(nl, nr, edges));
  }
}

TEST_CASE("regular graphs decompose into perfect matchings") {
  // 3-regular bipartite on 4+4: each color class must hit every vertex.
  const BipartiteGraph g =
      make_graph(4, 4, {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {1, 3},
                        {2, 2}, {2, 3}, {2, 0}, {3, 3}, {3, 0}, {3, 1}});
  const EdgeColoring c = bipartite_edge_coloring(g);
  CHECK(is_proper_coloring(g, c));
  CHECK(c.num_colors == 3);
  for (int color = 0; color < 3; ++color) {
    std::vector<int> left_hit(4, 0), right_hit(4, 0);
    for (int u = 0; u < 4; ++u)
      for (size_t k = 0; k < g.adj[u].size(); ++k)
        if (c.color_of[u][k] == color) {
          ++left_hit[u];
          ++right_hit[g.adj[u][k]];
        }
    CHECK(left_hit == std::vector<int>{1, 1, 1, 1});
    CHECK(right_hit == std::vector<int>{1, 1, 1, 1});
  }
}

TEST_CASE("coloring is deterministic") {
  std::mt19937 rng(5);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 15; ++u)
    for (int v = 0; v < 15; ++v)
      if (rng() % 2 == 0) edges.emplace_back(u, v);
  const BipartiteGraph g = make_graph(15, 15, edges);
  const EdgeColoring a = bipartite_edge_coloring(g);
  const EdgeColoring b = bipartite_edge_coloring(g);
  CHECK(a.num_colors == b.num_colors);
  CHECK(a.color_of == b.color_of);
}
