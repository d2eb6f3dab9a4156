#pragma once

#include <string>
#include <vector>

#include "designs/counting.hpp"
#include "designs/labeled_graph.hpp"

namespace designs {

// A family of blocks drawn inside a common host.  When it is a design,
// every host edge lies in exactly `multiplicity` blocks; verify_design
// checks that.  Blocks are kept sorted by canonical key.
struct BlockSet {
  LabeledGraph host;
  long long multiplicity = 1;
  std::vector<LabeledGraph> blocks;

  long long size() const { return static_cast<long long>(blocks.size()); }
  auto operator<=>(const BlockSet&) const = default;
};

// All copies of pattern in K_n, with multiplicity set to the uniform
// edge-cover count |blocks| * e(pattern) / C(n,2).
BlockSet complete_design(int n, const LabeledGraph& pattern);

// All copies of pattern in an arbitrary host.  Edge coverage need not be
// uniform, so multiplicity stays 1; use verify_design to test designhood.
BlockSet copies_design(const LabeledGraph& host, const LabeledGraph& pattern);

struct EdgeDefect {
  int u = 0;
  int v = 0;
  long long count = 0;  // observed cover count, != multiplicity
};

struct DesignReport {
  bool ok = false;
  long long multiplicity = 0;
  std::vector<EdgeDefect> defects;

  std::string summary() const;
};

// Checks that every block is a subgraph of the host and every host edge
// lies in exactly bs.multiplicity blocks.
DesignReport verify_design(const BlockSet& bs);

struct Redundancy {
  BigInt big_count;
  BigInt small_count;
  BigInt quotient;
  BigInt remainder;

  bool exact() const { return remainder == 0; }
  std::string summary() const;  // e.g. "20 = 1*15 + 5"
};

// |K_n(big)| = q * |K_n(small)| + r.  A regular sampling of K_n(big) by
// copies of small exists iff r = 0, with redundancy q.  Throws when small
// has no copy inside big (then no sampling can exist at any n).
Redundancy required_redundancy(int n, const LabeledGraph& big,
                               const LabeledGraph& small);

}  // namespace designs
