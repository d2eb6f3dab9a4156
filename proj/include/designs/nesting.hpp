#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "designs/sampling.hpp"

namespace designs {

// An m-cycle decomposition of K_n: cycles partition the edges.
struct CycleSystem {
  int n = 0;
  int m = 0;
  std::vector<LabeledGraph> cycles;

  BlockSet to_block_set() const;  // multiplicity 1
  auto operator<=>(const CycleSystem&) const = default;
};

// Vertex sequence of a single cycle, starting at its smallest vertex in
// the direction of that vertex's smaller neighbour.
std::vector<int> cycle_vertices(const LabeledGraph& cycle);

// hubs[i] is the hub assigned to cycles[i].
struct NestingAssignment {
  std::vector<int> hubs;
  auto operator<=>(const NestingAssignment&) const = default;
};

struct NestingReport {
  bool ok = false;
  std::string detail;
  std::vector<EdgeDefect> defects;
};

// A nesting is valid when every hub avoids its cycle and the stars
// {hub, x} for x on the cycle form a design covering every K_n edge
// exactly once.
NestingReport verify_nesting(const CycleSystem& cs,
                             const NestingAssignment& f);

// A wheel block keeps its hub explicitly: for m = 3 the rim is not
// recoverable from the edge set alone (the wheel on 4 vertices is K_4).
struct WheelBlock {
  LabeledGraph graph;
  int hub = -1;
  auto operator<=>(const WheelBlock&) const = default;
};

struct WheelDesign {
  int n = 0;
  int m = 0;  // rim length; wheels have m+1 vertices and 2m edges
  std::vector<WheelBlock> wheels;

  BlockSet to_block_set() const;  // multiplicity 2
};

struct WheelConstruction {
  WheelDesign wheels;
  BlockSet star_design;     // the stars {hub, x}, multiplicity 1
  SamplingMap to_cycles;    // wheel -> its rim, bijective
  SamplingMap to_stars;     // wheel -> its hub star, bijective
};

// Builds the wheel design C union star(C) from a valid nesting.  The
// wheels cover every K_n edge exactly twice; both extracted samplings
// are verified before returning.
WheelConstruction wheels_from_nesting(const CycleSystem& cs,
                                      const NestingAssignment& f);

// Recovers the cycle system and nesting from a wheel design and a
// bijective sampling onto a star design: the cycle is W minus xi(W), the
// hub is the star centre.  Throws when some difference is not an
// m-cycle or the star is not inside its wheel.
std::pair<CycleSystem, NestingAssignment> nesting_from_sampling(
    const WheelDesign& wd, const SamplingMap& xi);

enum class SearchStatus { found, none_exists, budget_exceeded };

struct NestingSearchResult {
  SearchStatus status = SearchStatus::none_exists;
  std::optional<NestingAssignment> nesting;
  long long nodes = 0;
};

// Backtracking over hub choices with edge-coverage forward checking.
// Deterministic: hubs are tried in ascending order.  The edge-count
// obstruction m*|cycles| = C(n,2) is applied before searching.
NestingSearchResult search_nesting(const CycleSystem& cs,
                                   long long budget = 10000000);

}  // namespace designs
