#pragma once

#include <utility>
#include <vector>

#include "designs/containment.hpp"

namespace designs {

struct Matching {
  // match_left[u] = matched right vertex or -1; match_right symmetric.
  std::vector<int> match_left;
  std::vector<int> match_right;
  long long size = 0;

  // Saturates the smaller side.
  bool full(const BipartiteGraph& g) const;
  std::vector<std::pair<int, int>> pairs() const;  // sorted by left index
};

// Maximum matching via Hopcroft-Karp with fixed vertex order, so the
// result is reproducible.  Biregular inputs always get a full matching.
Matching maximum_matching(const BipartiteGraph& g);

// maximum_matching, then throws Error unless the smaller side is
// saturated.
Matching full_matching(const BipartiteGraph& g);

}  // namespace designs
