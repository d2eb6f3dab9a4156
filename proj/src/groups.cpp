#include "designs/groups.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <string>

#include "designs/errors.hpp"

namespace designs {

namespace {

bool is_odd_prime(int n) {
  if (n < 3 || n % 2 == 0) return false;
  for (int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

int primitive_root(int p) {
  // p is an odd prime, so a generator of the unit group exists.
  for (int g = 2; g < p; ++g) {
    long long x = g;
    int ord = 1;
    while (x != 1) {
      x = x * g % p;
      ++ord;
    }
    if (ord == p - 1) return g;
  }
  throw Error("no primitive root modulo " + std::to_string(p));
}

Permutation shift(int n) {
  Permutation p;
  p.images.resize(n);
  for (int x = 0; x < n; ++x) p.images[x] = (x + 1) % n;
  return p;
}

Permutation scale(int n, long long a) {
  Permutation p;
  p.images.resize(n);
  for (int x = 0; x < n; ++x) p.images[x] = static_cast<int>(a * x % n);
  return p;
}

}  // namespace

PermutationGroup make_group(GroupKind kind, int n) {
  switch (kind) {
    case GroupKind::cyclic: {
      if (n < 1) throw Error("cyclic group needs degree >= 1");
      PermutationGroup g = PermutationGroup::from_generators(
          kind, n, {shift(n)});
      assert(g.order() == n);
      return g;
    }
    case GroupKind::affine_square: {
      if (!is_odd_prime(n))
        throw Error("affine-square group needs an odd prime degree, got " +
                    std::to_string(n));
      const int root = primitive_root(n);
      const long long square = static_cast<long long>(root) * root % n;
      PermutationGroup g = PermutationGroup::from_generators(
          kind, n, {shift(n), scale(n, square)});
      assert(g.order() == static_cast<long long>(n) * (n - 1) / 2);
      return g;
    }
    case GroupKind::symmetric: {
      if (n < 1) throw Error("symmetric group needs degree >= 1");
      if (n > 8)
        throw Error("symmetric group capped at degree 8, got " +
                    std::to_string(n));
      std::vector<Permutation> gens;
      if (n >= 2) {
        Permutation swap01 = Permutation::identity(n);
        std::swap(swap01.images[0], swap01.images[1]);
        gens = {swap01, shift(n)};
      }
      PermutationGroup g =
          PermutationGroup::from_generators(kind, n, std::move(gens));
      long long fact = 1;
      for (int k = 2; k <= n; ++k) fact *= k;
      assert(g.order() == fact);
      (void)fact;
      return g;
    }
    case GroupKind::custom:
      throw Error("custom groups are built from explicit generators");
  }
  throw Error("unknown group kind");
}

int OrbitDecomposition::find(const LabeledGraph& g) const {
  const auto it = index.find(canonical_key(g));
  return it == index.end() ? -1 : it->second;
}

OrbitDecomposition orbits(const PermutationGroup& G,
                          std::vector<LabeledGraph> objects) {
  OrbitDecomposition od;
  od.degree = G.degree();
  std::sort(objects.begin(), objects.end());
  for (size_t i = 0; i + 1 < objects.size(); ++i)
    if (objects[i] == objects[i + 1]) throw Error("duplicate objects");
  od.objects = std::move(objects);
  for (const LabeledGraph& g : od.objects)
    if (g.order() != od.degree)
      throw Error("object order differs from group degree");
  od.index.reserve(od.objects.size());
  for (size_t i = 0; i < od.objects.size(); ++i)
    od.index.emplace(canonical_key(od.objects[i]), static_cast<int>(i));

  const int m = static_cast<int>(od.objects.size());
  od.orbit_of.assign(m, -1);
  od.transporter.assign(m, Permutation::identity(od.degree));

  for (int start = 0; start < m; ++start) {
    if (od.orbit_of[start] != -1) continue;
    const int orbit = static_cast<int>(od.representative.size());
    od.representative.push_back(start);
    od.orbit_of[start] = orbit;
    long long size = 0;
    std::queue<int> pending;
    pending.push(start);
    while (!pending.empty()) {
      const int x = pending.front();
      pending.pop();
      ++size;
      for (const Permutation& gen : G.generators()) {
        const LabeledGraph image = apply_permutation(gen, od.objects[x]);
        const int y = od.find(image);
        if (y == -1)
          throw Error("family is not closed under the action: image of " +
                      std::to_string(x) + " is missing");
        if (od.orbit_of[y] != -1) continue;
        od.orbit_of[y] = orbit;
        od.transporter[y] = od.transporter[x].compose(gen);
        pending.push(y);
      }
    }
    od.orbit_size.push_back(size);
    long long stab = 0;
    for (const Permutation& g : G.elements())
      if (apply_permutation(g, od.objects[start]) == od.objects[start]) ++stab;
    od.stabilizer_order.push_back(stab);
    assert(size * stab == G.order());
  }
  return od;
}

bool is_semiregular(const PermutationGroup& G, const OrbitDecomposition& od) {
  (void)G;
  return std::all_of(od.stabilizer_order.begin(), od.stabilizer_order.end(),
                     [](long long s) { return s == 1; });
}

bool is_semiregular(const PermutationGroup& G,
                    const std::vector<LabeledGraph>& objects) {
  return is_semiregular(G, orbits(G, objects));
}

LiftedSampling lift_sampling(const PermutationGroup& G,
                             const OrbitDecomposition& big,
                             const OrbitDecomposition& small,
                             const std::vector<RepAssignment>& rule) {
  if (big.degree != G.degree() || small.degree != G.degree())
    throw Error("orbit decompositions do not match the group degree");
  if (!is_semiregular(G, big))
    throw Error("group does not act semiregularly on the big class; "
                "a representative rule cannot extend consistently");
  if (small.objects.empty()) throw Error("small class is empty");
  if (big.objects.size() % small.objects.size() != 0)
    throw Error("class sizes do not divide: " +
                std::to_string(big.objects.size()) + " over " +
                std::to_string(small.objects.size()));
  const long long lambda =
      static_cast<long long>(big.objects.size() / small.objects.size());

  LiftedSampling out;
  out.group = G;
  out.big = big;
  out.small = small;
  out.redundancy = lambda;
  out.rep_image.assign(big.orbit_count(), LabeledGraph{});
  std::vector<bool> assigned(big.orbit_count(), false);

  for (const RepAssignment& row : rule) {
    const int bi = big.find(row.block);
    if (bi == -1)
      throw Error("rule block is not in the big class");
    if (small.find(row.image) == -1)
      throw Error("rule image is not in the small class");
    if (!is_subgraph(row.image, row.block) ||
        row.image.edges() == row.block.edges())
      throw Error("rule image is not a proper subgraph of its block");
    const int orbit = big.orbit_of[bi];
    // Translate to the canonical representative along the transporter.
    const LabeledGraph translated =
        apply_permutation(big.transporter[bi].inverse(), row.image);
    if (!assigned[orbit]) {
      assigned[orbit] = true;
      out.rep_image[orbit] = translated;
    } else if (out.rep_image[orbit] != translated) {
      throw Error("rule gives conflicting images inside one orbit: the "
                  "row for block index " + std::to_string(bi) +
                  " forces a different representative image");
    }
  }
  for (long long o = 0; o < big.orbit_count(); ++o)
    if (!assigned[o])
      throw Error("rule misses the orbit of object index " +
                  std::to_string(big.representative[o]));

  // Preimage balance: every member of a small orbit with stabilizer
  // order s receives s preimages from each big orbit landing on it.
  std::vector<long long> landing(small.orbit_count(), 0);
  for (long long o = 0; o < big.orbit_count(); ++o) {
    const int si = small.find(out.rep_image[o]);
    assert(si != -1);
    ++landing[small.orbit_of[si]];
  }
  for (long long u = 0; u < small.orbit_count(); ++u) {
    const long long s = small.stabilizer_order[u];
    if (landing[u] * s != lambda)
      throw Error("orbit balance failed: small orbit " + std::to_string(u) +
                  " receives " + std::to_string(landing[u] * s) +
                  " preimages, expected " + std::to_string(lambda));
  }

  const auto to_block_set = [&](const OrbitDecomposition& od) {
    BlockSet bs;
    bs.host = complete_graph(od.degree);
    bs.blocks = od.objects;
    const DesignReport report = verify_design(bs);
    bs.multiplicity = report.ok ? report.multiplicity : 1;
    return bs;
  };
  out.map.source = to_block_set(big);
  out.map.target = to_block_set(small);
  out.map.assignment.resize(big.objects.size());
  for (size_t i = 0; i < big.objects.size(); ++i) {
    const int orbit = big.orbit_of[i];
    const LabeledGraph image =
        apply_permutation(big.transporter[i], out.rep_image[orbit]);
    const int j = small.find(image);
    assert(j != -1);
    out.map.assignment[i] = j;
  }

  const auto profile = verify_sampling(out.map);
  assert(profile.kind == RedundancyProfile::Kind::regular &&
         profile.min == lambda);
  (void)profile;
  return out;
}

}  // namespace designs
