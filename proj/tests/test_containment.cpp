#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "designs/block_set.hpp"
#include "designs/containment.hpp"
#include "designs/errors.hpp"

using namespace designs;

namespace {

ContainmentGraph complete_host_containment(int n, const LabeledGraph& big,
                                           const LabeledGraph& small) {
  return build_containment(complete_design(n, big),
                           complete_design(n, small));
}

}  // namespace

TEST_CASE("containment graph joins proper subgraphs only") {
  const ContainmentGraph cg =
      complete_host_containment(4, complete_graph(3), complete_graph(2));
  CHECK(cg.graph.n_left == 4);
  CHECK(cg.graph.n_right == 6);
  CHECK(cg.graph.edge_count() == 12);  // each triangle holds 3 edges
  for (int u = 0; u < cg.graph.n_left; ++u)
    for (int j : cg.graph.adj[u]) {
      CHECK(is_subgraph(cg.right[j], cg.left[u]));
      CHECK(cg.right[j] != cg.left[u]);
    }
}

TEST_CASE("equal designs give an edgeless containment graph") {
  ContainmentGraph cg =
      complete_host_containment(5, complete_graph(3), complete_graph(3));
  CHECK(cg.graph.edge_count() == 0);
  CHECK(biregular_degrees(cg) ==
        std::pair<long long, long long>{0, 0});
}

TEST_CASE("complete hosts are biregular with exact handshake") {
  struct Case {
    int n;
    LabeledGraph big, small;
    int d, e;
  };
  const std::vector<Case> cases = {
      {7, cycle_graph(4), path_graph(3), 4, 4},
      {6, complete_graph(3), complete_graph(2), 3, 4},
      {8, complete_graph(4), complete_graph(3), 4, 5},
  };
  for (const Case& c : cases) {
    ContainmentGraph cg = complete_host_containment(c.n, c.big, c.small);
    const auto [d, e] = biregular_degrees(cg);
    CHECK(d == c.d);
    CHECK(e == c.e);
    const long long left = static_cast<long long>(cg.graph.n_left) * d;
    const long long right = static_cast<long long>(cg.graph.n_right) * e;
    CHECK(left == right);
    CHECK(left == cg.graph.edge_count());
  }
}

TEST_CASE("containment degrees are input-order independent") {
  const ContainmentGraph a =
      complete_host_containment(7, cycle_graph(4), path_graph(3));
  // Same designs assembled from reversed block lists.
  BlockSet big = complete_design(7, cycle_graph(4));
  BlockSet small = complete_design(7, path_graph(3));
  std::reverse(big.blocks.begin(), big.blocks.end());
  std::reverse(small.blocks.begin(), small.blocks.end());
  const ContainmentGraph b = build_containment(big, small);
  CHECK(a.graph.adj == b.graph.adj);
}

TEST_CASE("a generic host breaks biregularity") {
  ContainmentGraph cg = build_containment(
      copies_design(path_graph(4), path_graph(3)),
      copies_design(path_graph(4), path_graph(2)));
  CHECK_THROWS_AS(biregular_degrees(cg), NotBiregular);
}

TEST_CASE("mismatched hosts and duplicate blocks are rejected") {
  CHECK_THROWS_AS(build_containment(complete_design(5, complete_graph(3)),
                                    complete_design(6, complete_graph(2))),
                  Error);
  BlockSet dup = complete_design(4, complete_graph(3));
  dup.blocks.push_back(dup.blocks.front());
  CHECK_THROWS_AS(
      build_containment(dup, complete_design(4, complete_graph(2))), Error);
}

TEST_CASE("replication scales sides and degrees") {
  const ContainmentGraph cg =
      complete_host_containment(6, complete_graph(3), complete_graph(2));
  const ReplicatedGraph rg = replicate(cg, 3, 4);
  CHECK(rg.left_size() == 60);
  CHECK(rg.right_size() == 60);
  const BipartiteGraph bg = rg.to_bipartite();
  for (int d : bg.left_degrees()) CHECK(d == 12);
  for (int e : bg.right_degrees()) CHECK(e == 12);
}

TEST_CASE("replication indexing keeps copies interchangeable") {
  const ContainmentGraph cg =
      complete_host_containment(4, complete_graph(3), complete_graph(2));
  const ReplicatedGraph rg = replicate(cg, 2, 3);
  const BipartiteGraph bg = rg.to_bipartite();
  // Copy c of left i is adjacent exactly to all copies of i's neighbours.
  for (int i = 0; i < cg.graph.n_left; ++i)
    for (int c = 0; c < 2; ++c) {
      std::vector<int> expect;
      for (int j : cg.graph.adj[i])
        for (int b = 0; b < 3; ++b) expect.push_back(j * 3 + b);
      std::sort(expect.begin(), expect.end());
      CHECK(bg.adj[i * 2 + c] == expect);
    }
}

TEST_CASE("collapse undoes replication") {
  const ContainmentGraph cg =
      complete_host_containment(6, complete_graph(3), complete_graph(2));
  for (const auto& [a, b] : {std::pair{1, 1}, {2, 3}, {4, 1}}) {
    const ReplicatedGraph rg = replicate(cg, a, b);
    CHECK(collapse(rg).adj == cg.graph.adj);
  }
}

TEST_CASE("replication caps blow-up") {
  const ContainmentGraph cg =
      complete_host_containment(6, complete_graph(3), complete_graph(2));
  CHECK_THROWS_AS(replicate(cg, 1000000, 1000000), Error);
}
