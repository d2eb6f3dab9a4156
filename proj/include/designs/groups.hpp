#pragma once

#include <unordered_map>
#include <vector>

#include "designs/permutation.hpp"
#include "designs/sampling.hpp"

namespace designs {

// cyclic: x -> x+1 (order n).  affine_square: x -> a x + b with a a
// nonzero square mod an odd prime n (order n(n-1)/2).  symmetric: all of
// S_n, materialized, so n is capped.
PermutationGroup make_group(GroupKind kind, int n);

// Orbit decomposition of a family of blocks closed under a vertex
// group action.  Objects are kept sorted by canonical key; orbits are
// numbered by their representative's position in that order.
struct OrbitDecomposition {
  int degree = 0;
  std::vector<LabeledGraph> objects;
  std::vector<int> orbit_of;              // per object
  std::vector<int> representative;        // per orbit: object index, min key
  std::vector<long long> orbit_size;      // per orbit
  std::vector<long long> stabilizer_order;  // per orbit, at the representative
  std::vector<Permutation> transporter;   // per object: maps its rep to it

  long long orbit_count() const {
    return static_cast<long long>(representative.size());
  }
  // Object index by value; -1 when absent.
  int find(const LabeledGraph& g) const;

  std::unordered_map<CanonicalKey, int, CanonicalKeyHash> index;
};

// Throws when the family is not closed under the action.  Every orbit
// satisfies |orbit| * |stabilizer| = |G|.
OrbitDecomposition orbits(const PermutationGroup& G,
                          std::vector<LabeledGraph> objects);

// True iff every stabilizer is trivial (every orbit has size |G|).
bool is_semiregular(const PermutationGroup& G, const OrbitDecomposition& od);
bool is_semiregular(const PermutationGroup& G,
                    const std::vector<LabeledGraph>& objects);

// One row of a representative-level sampling rule: block is a member of
// a big orbit (not necessarily the canonical representative), image a
// small-class object properly contained in it.
struct RepAssignment {
  LabeledGraph block;
  LabeledGraph image;
};

// A sampling produced by translating a representative-level rule along
// a group action, with enough structure kept to print orbit tables.
struct LiftedSampling {
  SamplingMap map;
  PermutationGroup group;
  OrbitDecomposition big;
  OrbitDecomposition small;
  // Per big orbit: the image block assigned to the canonical
  // representative after translation.
  std::vector<LabeledGraph> rep_image;
  long long redundancy = 0;
};

// Extends rule to all of big by xi(sigma(t)) = sigma(rule(t)).  Requires:
// the group acts semiregularly on the big class (well-definedness); the
// rule covers every big orbit exactly once (two members of one orbit are
// only accepted when their translated images agree, otherwise the image
// is forced and the rule is contradictory); every image is a proper
// subgraph of its block and a member of the small class; and for every
// small orbit with representative u, the number of rule rows landing in
// that orbit is lambda / |Stab(u)| where lambda = |big| / |small|.
LiftedSampling lift_sampling(const PermutationGroup& G,
                             const OrbitDecomposition& big,
                             const OrbitDecomposition& small,
                             const std::vector<RepAssignment>& rule);

}  // namespace designs
