#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "designs/errors.hpp"
#include "designs/matching.hpp"

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

// Exhaustive maximum matching by recursion over left vertices.
long long brute_max_matching(const BipartiteGraph& g) {
  std::vector<char> taken(g.n_right, 0);
  long long best = 0;
  auto rec = [&](auto&& self, int u, long long size) -> void {
    if (u == g.n_left) {
      best = std::max(best, size);
      return;
    }
    self(self, u + 1, size);  // leave u unmatched
    for (int v : g.adj[u]) {
      if (taken[v]) continue;
      taken[v] = 1;
      self(self, u + 1, size + 1);
      taken[v] = 0;
    }
  };
  rec(rec, 0, 0);
  return best;
}

void check_consistent(const BipartiteGraph& g, const Matching& m) {
  long long count = 0;
  for (int u = 0; u < g.n_left; ++u) {
    const int v = m.match_left[u];
    if (v == -1) continue;
    ++count;
    CHECK(m.match_right[v] == u);
    CHECK(std::binary_search(g.adj[u].begin(), g.adj[u].end(), v));
  }
  for (int v = 0; v < g.n_right; ++v)
    if (m.match_right[v] != -1) CHECK(m.match_left[m.match_right[v]] == v);
  CHECK(m.size == count);
}

}  // namespace

TEST_CASE("maximum matching on hand-checked graphs") {
  // Perfect matching in K_{3,3}.
  const BipartiteGraph k33 = make_graph(
      3, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2},
             {2, 0}, {2, 1}, {2, 2}});
  const Matching m1 = maximum_matching(k33);
  CHECK(m1.size == 3);
  CHECK(m1.full(k33));
  check_consistent(k33, m1);

  // Two lefts forced onto one right: maximum is 2.
  const BipartiteGraph pinch =
      make_graph(3, 3, {{0, 0}, {1, 0}, {2, 0}, {2, 1}});
  const Matching m2 = maximum_matching(pinch);
  CHECK(m2.size == 2);
  CHECK(!m2.full(pinch));
  check_consistent(pinch, m2);

  // Alternating-path case: the greedy first choice must be undone.
  const BipartiteGraph path =
      make_graph(2, 2, {{0, 0}, {0, 1}, {1, 0}});
  const Matching m3 = maximum_matching(path);
  CHECK(m3.size == 2);
  check_consistent(path, m3);

  // Empty graph.
  const BipartiteGraph empty = make_graph(2, 3, {});
  CHECK(maximum_matching(empty).size == 0);
}

TEST_CASE("full side is the smaller side") {
  const BipartiteGraph wide =
      make_graph(2, 4, {{0, 0}, {0, 1}, {1, 2}, {1, 3}});
  const Matching m = maximum_matching(wide);
  CHECK(m.size == 2);
  CHECK(m.full(wide));  // left is smaller and saturated

  const BipartiteGraph tall = make_graph(4, 2, {{0, 0}, {1, 1}, {2, 0}, {3, 1}});
  const Matching t = maximum_matching(tall);
  CHECK(t.size == 2);
  CHECK(t.full(tall));  // right is smaller and saturated
}

TEST_CASE("full_matching throws on deficient graphs") {
  const BipartiteGraph pinch =
      make_graph(3, 3, {{0, 0}, {1, 0}, {2, 0}, {2, 1}});
  CHECK_THROWS_WITH_AS(full_matching(pinch), "no full matching: maximum 2 of 3",
                       Error);

  const BipartiteGraph fine = make_graph(2, 3, {{0, 1}, {1, 2}});
  CHECK(full_matching(fine).size == 2);
}

TEST_CASE("pairs lists matched edges by left index") {
  const BipartiteGraph g = make_graph(3, 3, {{0, 2}, {1, 1}, {2, 0}});
  const Matching m = maximum_matching(g);
  CHECK(m.pairs() ==
        std::vector<std::pair<int, int>>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("matching size matches exhaustive search on random graphs") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    const int nl = 1 + static_cast<int>(rng() % 7);
    const int nr = 1 + static_cast<int>(rng() % 7);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < nl; ++u)
      for (int v = 0; v < nr; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    const BipartiteGraph g = make_graph(nl, nr, edges);
    const Matching m = maximum_matching(g);
    check_consistent(g, m);
    CHECK(m.size == brute_max_matching(g));
  }
}

TEST_CASE("matching is deterministic") {
  std::mt19937 rng(7);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 20; ++u)
    for (int v = 0; v < 20; ++v)
      if (rng() % 4 == 0) edges.emplace_back(u, v);
  const BipartiteGraph g = make_graph(20, 20, edges);
  const Matching a = maximum_matching(g);
  const Matching b = maximum_matching(g);
  CHECK(a.match_left == b.match_left);
  CHECK(a.match_right == b.match_right);
}
