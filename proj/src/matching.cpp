#include "designs/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "designs/errors.hpp"

namespace designs {

bool Matching::full(const BipartiteGraph& g) const {
  return size == std::min(g.n_left, g.n_right);
}

std::vector<std::pair<int, int>> Matching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (size_t u = 0; u < match_left.size(); ++u)
    if (match_left[u] >= 0) out.emplace_back(static_cast<int>(u),
                                             match_left[u]);
  return out;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Hopcroft-Karp.  Vertices are always scanned in index order.
struct HopcroftKarp {
  const BipartiteGraph& g;
  std::vector<int> match_left, match_right, dist;

  explicit HopcroftKarp(const BipartiteGraph& graph)
      : g(graph),
        match_left(graph.n_left, -1),
        match_right(graph.n_right, -1),
        dist(graph.n_left, kInf) {}

  bool bfs() {
    std::queue<int> queue;
    for (int u = 0; u < g.n_left; ++u) {
      if (match_left[u] == -1) {
        dist[u] = 0;
        queue.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    bool reachable = false;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int v : g.adj[u]) {
        const int w = match_right[v];
        if (w == -1) {
          reachable = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push(w);
        }
      }
    }
    return reachable;
  }

  bool dfs(int u) {
    for (int v : g.adj[u]) {
      const int w = match_right[v];
      if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  }

  long long run() {
    long long size = 0;
    while (bfs())
      for (int u = 0; u < g.n_left; ++u)
        if (match_left[u] == -1 && dfs(u)) ++size;
    return size;
  }
};

}  // namespace

Matching maximum_matching(const BipartiteGraph& g) {
  HopcroftKarp hk(g);
  Matching out;
  out.size = hk.run();
  out.match_left = std::move(hk.match_left);
  out.match_right = std::move(hk.match_right);
  return out;
}

Matching full_matching(const BipartiteGraph& g) {
  Matching m = maximum_matching(g);
  if (!m.full(g))
    throw Error("no full matching: maximum " + std::to_string(m.size) +
                " of " + std::to_string(std::min(g.n_left, g.n_right)));
  return m;
}

}  // namespace designs
