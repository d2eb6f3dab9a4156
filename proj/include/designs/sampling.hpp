#pragma once

#include <map>
#include <string>
#include <vector>

#include "designs/block_set.hpp"

namespace designs {

// Preimage-count statistics of a sampling (counts indexed by target).
struct RedundancyProfile {
  enum class Kind { regular, semiregular, irregular };

  std::vector<long long> counts;
  long long min = 0;
  long long max = 0;
  std::map<long long, long long> histogram;  // count value -> #targets
  Kind kind = Kind::irregular;

  std::string summary() const;  // "regular(4)", "semiregular(1,2)", ...
};

// A surjection from source blocks onto target blocks with every image a
// subgraph of its preimage: assignment[i] = target index of source i.
struct SamplingMap {
  BlockSet source;
  BlockSet target;
  std::vector<int> assignment;
};

// An image choice for every source block with the source contained in
// the image: assignment[i] = target index, source[i] <= target[j].
// strict = the assignment is injective.
struct EmbeddingMap {
  BlockSet source;
  BlockSet target;
  std::vector<int> assignment;
  bool strict = false;
};

// Checks containment and surjectivity (throws Error with the offending
// index), then returns the preimage profile.
RedundancyProfile verify_sampling(const SamplingMap& sm);

// Checks containment (source block inside its image) and, when the map
// claims to be strict, injectivity; returns the preimage profile over
// targets.
RedundancyProfile verify_embedding(const EmbeddingMap& em);

// A sampling of K_n(big) onto K_n(small) in which every target has
// exactly lambda = |K_n(big)| / |K_n(small)| preimages.  Throws
// Nonexistence when the division is not exact.
SamplingMap regular_sampling(int n, const LabeledGraph& big,
                             const LabeledGraph& small);

// An embedding of K_n(small) into K_n(big) in which every target has
// exactly lambda = |K_n(small)| / |K_n(big)| preimages; strict iff
// lambda = 1.  Throws Nonexistence when the division is not exact.
EmbeddingMap regular_embedding(int n, const LabeledGraph& small,
                               const LabeledGraph& big);

// With lambda = floor(|K_n(big)| / |K_n(small)|) >= 1: a sampling in
// which every target has at least lambda preimages.  Leftover sources
// are assigned to their smallest contained target by canonical key.
SamplingMap floor_sampling(int n, const LabeledGraph& big,
                           const LabeledGraph& small);

// A (1,2)-semiregular sampling: every target has one or two preimages
// and exactly r = |K_n(big)| - |K_n(small)| of them have two.  Requires
// 0 < r < |K_n(small)| and |K_n(big)| * (e + r - 1) > e * r^2 where e is
// the right containment degree.
SamplingMap semiregular_sampling(int n, const LabeledGraph& big,
                                 const LabeledGraph& small);

// first followed by second; first.target must equal second.source.
// Regular samplings compose to a regular sampling with the product
// redundancy.
SamplingMap compose(const SamplingMap& first, const SamplingMap& second);

// Inverse of a bijective sampling, as an embedding with xi(psi(G)) = G.
EmbeddingMap embedding_from_sampling(const SamplingMap& sm);

}  // namespace designs
