#include "designs/edge_coloring.hpp"

#include <algorithm>
#include <cassert>

#include "designs/errors.hpp"

namespace designs {

int EdgeColoring::color(const BipartiteGraph& g, int u, int v) const {
  const auto& row = g.adj[u];
  const auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) throw Error("no such edge");
  return color_of[u][it - row.begin()];
}

EdgeColoring bipartite_edge_coloring(const BipartiteGraph& g) {
  int max_deg = 0;
  for (int d : g.left_degrees()) max_deg = std::max(max_deg, d);
  for (int d : g.right_degrees()) max_deg = std::max(max_deg, d);

  EdgeColoring out;
  out.num_colors = max_deg;
  out.color_of.assign(g.n_left, {});
  for (int u = 0; u < g.n_left; ++u)
    out.color_of[u].assign(g.adj[u].size(), -1);
  if (max_deg == 0) return out;

  // left_at[u][c] = right end of u's c-coloured edge, or -1; right_at
  // mirrors it.  A colour is free at a vertex when its slot is -1.
  std::vector<std::vector<int>> left_at(g.n_left,
                                        std::vector<int>(max_deg, -1));
  std::vector<std::vector<int>> right_at(g.n_right,
                                         std::vector<int>(max_deg, -1));
  auto smallest_free = [max_deg](const std::vector<int>& at) {
    for (int c = 0; c < max_deg; ++c)
      if (at[c] == -1) return c;
    return -1;
  };
  auto edge_slot = [&](int u, int v) {
    const auto& row = g.adj[u];
    return static_cast<int>(std::lower_bound(row.begin(), row.end(), v) -
                            row.begin());
  };
  auto paint = [&](int u, int v, int c) {
    out.color_of[u][edge_slot(u, v)] = c;
    left_at[u][c] = v;
    right_at[v][c] = u;
  };

  for (int u = 0; u < g.n_left; ++u) {
    for (size_t k = 0; k < g.adj[u].size(); ++k) {
      const int v = g.adj[u][k];
      const int a = smallest_free(left_at[u]);
      const int b = smallest_free(right_at[v]);
      assert(a >= 0 && b >= 0);
      if (right_at[v][a] == -1) {
        paint(u, v, a);
        continue;
      }
      if (left_at[u][b] == -1) {
        paint(u, v, b);
        continue;
      }
      // a is free at u but busy at v; b is free at v but busy at u.
      // Swap a and b along the maximal alternating path from u, whose
      // edges are coloured b, a, b, a, ...  Right vertices on the path
      // are entered along colour b, which is free at v, so the path
      // never touches v and the swap frees b at u.
      std::vector<std::pair<int, int>> path;  // (left, right)
      int x = u;
      bool from_left = true;
      int next_colour = b;
      while (true) {
        if (from_left) {
          const int y = left_at[x][next_colour];
          if (y == -1) break;
          path.emplace_back(x, y);
          x = y;
        } else {
          const int y = right_at[x][next_colour];
          if (y == -1) break;
          path.emplace_back(y, x);
          x = y;
        }
        from_left = !from_left;
        next_colour = next_colour == b ? a : b;
      }
      for (size_t i = 0; i < path.size(); ++i) {
        const int old_colour = i % 2 == 0 ? b : a;
        const auto [l, r] = path[i];
        if (left_at[l][old_colour] == r) left_at[l][old_colour] = -1;
        if (right_at[r][old_colour] == l) right_at[r][old_colour] = -1;
      }
      for (size_t i = 0; i < path.size(); ++i) {
        const auto [l, r] = path[i];
        paint(l, r, i % 2 == 0 ? a : b);
        assert(r != v);
      }
      assert(left_at[u][b] == -1 && right_at[v][b] == -1);
      paint(u, v, b);
    }
  }
  return out;
}

bool is_proper_coloring(const BipartiteGraph& g, const EdgeColoring& c) {
  std::vector<std::vector<char>> left_seen(g.n_left), right_seen(g.n_right);
  for (auto& row : left_seen) row.assign(std::max(1, c.num_colors), 0);
  for (auto& row : right_seen) row.assign(std::max(1, c.num_colors), 0);
  for (int u = 0; u < g.n_left; ++u)
    for (size_t k = 0; k < g.adj[u].size(); ++k) {
      const int col = c.color_of[u][k];
      if (col < 0 || col >= c.num_colors) return false;
      if (left_seen[u][col] || right_seen[g.adj[u][k]][col]) return false;
      left_seen[u][col] = 1;
      right_seen[g.adj[u][k]][col] = 1;
    }
  return true;
}

}  // namespace designs
