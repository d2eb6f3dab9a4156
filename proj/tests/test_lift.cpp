#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <vector>

#include "designs/errors.hpp"
#include "designs/groups.hpp"
#include "designs/starter.hpp"

using namespace designs;

namespace {

// Quadruple abcd read as the 4-cycle a-b-c-d, image the path a-b-c.
RepAssignment quad_row(std::array<int, 4> q) {
  return {cycle_block(7, {q[0], q[1], q[2], q[3]}),
          path_block(7, {q[0], q[1], q[2]})};
}

const std::array<std::array<int, 4>, 15> kCyclicRows = {{
    {0, 1, 2, 6}, {0, 1, 3, 6}, {0, 1, 4, 6}, {0, 1, 5, 2}, {0, 1, 6, 3},
    {0, 2, 3, 1}, {0, 2, 4, 5}, {0, 2, 5, 3}, {0, 2, 6, 1}, {0, 3, 4, 6},
    {0, 3, 5, 1}, {0, 3, 6, 2}, {0, 4, 5, 1}, {0, 4, 6, 1}, {0, 5, 6, 2},
}};

const std::array<std::array<int, 4>, 5> kAffineRows = {{
    {0, 1, 2, 6}, {0, 1, 3, 6}, {0, 1, 4, 6}, {0, 1, 5, 4}, {0, 3, 5, 1},
}};

std::vector<RepAssignment> rows_to_rule(const auto& rows) {
  std::vector<RepAssignment> rule;
  for (const auto& q : rows) rule.push_back(quad_row(q));
  return rule;
}

LiftedSampling lift_cycles_onto_paths(GroupKind kind,
                                      const std::vector<RepAssignment>& rule) {
  const PermutationGroup g = make_group(kind, 7);
  const OrbitDecomposition big =
      orbits(g, complete_design(7, cycle_graph(4)).blocks);
  const OrbitDecomposition small =
      orbits(g, complete_design(7, path_graph(3)).blocks);
  return lift_sampling(g, big, small, rule);
}

}  // namespace

TEST_CASE("a 15-row rule lifts along the rotation group of order 7") {
  const LiftedSampling ls =
      lift_cycles_onto_paths(GroupKind::cyclic, rows_to_rule(kCyclicRows));
  CHECK(ls.redundancy == 1);
  CHECK(ls.big.orbit_count() == 15);
  CHECK(ls.small.orbit_count() == 15);
  const RedundancyProfile p = verify_sampling(ls.map);
  CHECK(p.kind == RedundancyProfile::Kind::regular);
  CHECK(p.max == 1);

  // Every listed row is honored verbatim by the full map.
  for (const auto& q : kCyclicRows) {
    const RepAssignment row = quad_row(q);
    const int i = ls.big.find(row.block);
    const int j = ls.small.find(row.image);
    REQUIRE(i >= 0);
    REQUIRE(j >= 0);
    CHECK(ls.map.assignment[i] == j);
  }

  // Equivariance at a few sampled group elements and blocks.
  const PermutationGroup g = make_group(GroupKind::cyclic, 7);
  for (const Permutation& sigma : g.elements()) {
    for (int i : {0, 17, 52, 104}) {
      const LabeledGraph moved =
          apply_permutation(sigma, ls.map.source.blocks[i]);
      const LabeledGraph image =
          ls.map.target.blocks[ls.map.assignment[i]];
      const int k = ls.big.find(moved);
      REQUIRE(k >= 0);
      CHECK(ls.map.target.blocks[ls.map.assignment[k]] ==
            apply_permutation(sigma, image));
    }
  }
}

TEST_CASE("a 5-row rule lifts along the affine group of order 21") {
  const LiftedSampling ls =
      lift_cycles_onto_paths(GroupKind::affine_square, rows_to_rule(kAffineRows));
  CHECK(ls.redundancy == 1);
  CHECK(ls.big.orbit_count() == 5);
  CHECK(ls.small.orbit_count() == 5);
  CHECK(verify_sampling(ls.map).max == 1);

  // The cycle 0-1-5-2 sits in the orbit of 0-1-4-6, and translation
  // forces its image to be the path 0-2-5 rather than 0-1-5.
  const int i = ls.big.find(cycle_block(7, {0, 1, 5, 2}));
  REQUIRE(i >= 0);
  CHECK(ls.map.target.blocks[ls.map.assignment[i]] ==
        path_block(7, {0, 2, 5}));
}

TEST_CASE("the rotation rule contradicts itself over the affine group") {
  // Under the larger group the 15 quadruples fall into 5 orbits, and the
  // listed images disagree inside at least one of them.
  CHECK_THROWS_AS(lift_cycles_onto_paths(GroupKind::affine_square,
                                         rows_to_rule(kCyclicRows)),
                  Error);
}

TEST_CASE("lift rejects rules that miss an orbit or land unevenly") {
  auto rule = rows_to_rule(kCyclicRows);
  rule.pop_back();
  CHECK_THROWS_AS(lift_cycles_onto_paths(GroupKind::cyclic, rule), Error);

  // Rerouting one row to a path from another small orbit starves the
  // orbit it left.
  auto skewed = rows_to_rule(kCyclicRows);
  skewed[5].image = path_block(7, {2, 3, 1});  // row 0231, path 2-3-1
  CHECK_THROWS_AS(lift_cycles_onto_paths(GroupKind::cyclic, skewed), Error);
}

TEST_CASE("lift validates rule membership and containment") {
  auto rule = rows_to_rule(kCyclicRows);
  rule[0].block = subset_block(7, {0, 1, 2});  // not a 4-cycle
  CHECK_THROWS_AS(lift_cycles_onto_paths(GroupKind::cyclic, rule), Error);

  rule = rows_to_rule(kCyclicRows);
  rule[0].image = path_block(7, {0, 1, 3});  // edge 13 absent from 0126
  CHECK_THROWS_AS(lift_cycles_onto_paths(GroupKind::cyclic, rule), Error);
}

TEST_CASE("lift requires a semiregular action on the big class") {
  // Rotating K_6 fixes the triangle {0,2,4} under the shift by two, so
  // triples are not acted on semiregularly.
  const PermutationGroup g = make_group(GroupKind::cyclic, 6);
  const OrbitDecomposition big =
      orbits(g, complete_design(6, complete_graph(3)).blocks);
  const OrbitDecomposition small =
      orbits(g, complete_design(6, complete_graph(2)).blocks);
  CHECK_THROWS_AS(lift_sampling(g, big, small, {}), Error);
}

TEST_CASE("triple starter tables") {
  const TripleStarter s14 = triple_starter(14);
  CHECK(s14.lambda == 4);
  CHECK(s14.v == 7);
  CHECK(s14.even);
  CHECK(s14.t1.size() == 20);
  CHECK(s14.t2.size() == 3);
  CHECK(s14.t3.size() == 1);
  CHECK(s14.t4.size() == 2);
  CHECK(s14.t2 == std::vector<std::array<int, 3>>{
                      {0, 6, 7}, {0, 6, 8}, {0, 6, 9}});
  CHECK(s14.t3 == std::vector<std::array<int, 3>>{{0, 6, 1}});
  CHECK(s14.t4 == std::vector<std::array<int, 3>>{{0, 7, 1}, {0, 7, 2}});
  CHECK(s14.all().size() == 26);

  const TripleStarter s17 = triple_starter(17);
  CHECK(s17.lambda == 5);
  CHECK(s17.v == 8);
  CHECK(!s17.even);
  CHECK(s17.t1.size() == 30);
  CHECK(s17.t2.size() == 4);
  CHECK(s17.t3.size() == 1);
  CHECK(s17.t4.size() == 5);
  CHECK(s17.t4 == std::vector<std::array<int, 3>>{
                      {0, 8, 1}, {0, 8, 2}, {0, 8, 9}, {0, 8, 10}, {0, 8, 11}});
  CHECK(s17.all().size() == 40);

  // Smallest case: the two families overlap in {0,2,3}.
  const TripleStarter s5 = triple_starter(5);
  CHECK(s5.lambda == 1);
  CHECK(s5.t1 == std::vector<std::array<int, 3>>{{0, 1, 2}, {0, 2, 3}});
  CHECK(s5.t2.empty());
  CHECK(s5.t3.empty());
  CHECK(s5.t4 == std::vector<std::array<int, 3>>{{0, 2, 3}});
  CHECK(s5.all().size() == 2);

  CHECK_THROWS_AS(triple_starter(6), Error);
  CHECK_THROWS_AS(triple_starter(2), Error);
}

TEST_CASE("triple starters lift to regular samplings") {
  for (const int n : {5, 8, 11, 14}) {
    const LiftedSampling ls = triple_sampling(n);
    CHECK(ls.redundancy == (n - 2) / 3);
    const RedundancyProfile p = verify_sampling(ls.map);
    CHECK(p.kind == RedundancyProfile::Kind::regular);
    CHECK(p.min == (n - 2) / 3);
    CHECK(ls.map.source.blocks.size() ==
          complete_design(n, complete_graph(3)).blocks.size());
  }
  // The diagonal pair orbit of an even order has stabilizer two, so both
  // even-variant rows must land on it.
  const LiftedSampling ls = triple_sampling(14);
  const int diag = ls.small.find(subset_block(14, {0, 7}));
  REQUIRE(diag >= 0);
  CHECK(ls.small.stabilizer_order[ls.small.orbit_of[diag]] == 2);
}
