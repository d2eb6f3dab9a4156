#include "designs/sampling.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "designs/containment.hpp"
#include "designs/edge_coloring.hpp"
#include "designs/errors.hpp"
#include "designs/matching.hpp"

namespace designs {

namespace {

RedundancyProfile profile_of(const std::vector<long long>& counts) {
  RedundancyProfile out;
  out.counts = counts;
  if (counts.empty()) return out;
  out.min = *std::min_element(counts.begin(), counts.end());
  out.max = *std::max_element(counts.begin(), counts.end());
  for (long long c : counts) ++out.histogram[c];
  if (out.min == out.max)
    out.kind = RedundancyProfile::Kind::regular;
  else if (out.histogram.size() == 2 && out.max == out.min + 1)
    out.kind = RedundancyProfile::Kind::semiregular;
  else
    out.kind = RedundancyProfile::Kind::irregular;
  return out;
}

long long to_small(const BigInt& value, const char* what) {
  if (value > 1000000000LL)
    throw Error(std::string(what) + " too large for this construction");
  return value.convert_to<long long>();
}

struct Instance {
  BlockSet big;
  BlockSet small;
  BigInt q, r;

  bool identical() const { return big.blocks == small.blocks; }
};

Instance make_instance(int n, const LabeledGraph& big,
                       const LabeledGraph& small) {
  if (!has_copy(big.compacted(), small))
    throw Error("small pattern is not a subgraph of the big one; "
                "no sampling can exist");
  Instance inst;
  inst.big = complete_design(n, big);
  inst.small = complete_design(n, small);
  boost::multiprecision::divide_qr(BigInt(inst.big.size()),
                                   BigInt(inst.small.size()), inst.q, inst.r);
  return inst;
}

std::string nonexistence_message(const Instance& inst) {
  std::ostringstream os;
  os << "no regular sampling: " << inst.big.size() << " = " << inst.q << "*"
     << inst.small.size() << " + " << inst.r;
  return os.str();
}

}  // namespace

std::string RedundancyProfile::summary() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::regular:
      os << "regular(" << min << ")";
      break;
    case Kind::semiregular:
      os << "semiregular(" << min << "," << max << ")";
      break;
    case Kind::irregular:
      os << "irregular(" << min << ".." << max << ")";
      break;
  }
  return os.str();
}

RedundancyProfile verify_sampling(const SamplingMap& sm) {
  if (sm.assignment.size() != sm.source.blocks.size())
    throw Error("assignment length differs from source size");
  std::vector<long long> counts(sm.target.blocks.size(), 0);
  for (size_t i = 0; i < sm.assignment.size(); ++i) {
    const int j = sm.assignment[i];
    if (j < 0 || j >= static_cast<int>(sm.target.blocks.size()))
      throw Error("assignment out of range at source " + std::to_string(i));
    if (!is_subgraph(sm.target.blocks[j], sm.source.blocks[i]))
      throw Error("image is not a subgraph of its source at index " +
                  std::to_string(i));
    ++counts[j];
  }
  for (size_t j = 0; j < counts.size(); ++j)
    if (counts[j] == 0)
      throw Error("not surjective: target " + std::to_string(j) +
                  " has no preimage");
  return profile_of(counts);
}

RedundancyProfile verify_embedding(const EmbeddingMap& em) {
  if (em.assignment.size() != em.source.blocks.size())
    throw Error("assignment length differs from source size");
  std::vector<long long> counts(em.target.blocks.size(), 0);
  for (size_t i = 0; i < em.assignment.size(); ++i) {
    const int j = em.assignment[i];
    if (j < 0 || j >= static_cast<int>(em.target.blocks.size()))
      throw Error("assignment out of range at source " + std::to_string(i));
    if (!is_subgraph(em.source.blocks[i], em.target.blocks[j]))
      throw Error("source is not a subgraph of its image at index " +
                  std::to_string(i));
    ++counts[j];
  }
  const bool injective =
      std::all_of(counts.begin(), counts.end(),
                  [](long long c) { return c <= 1; });
  if (em.strict && !injective) throw Error("strict embedding not injective");
  return profile_of(counts);
}

SamplingMap regular_sampling(int n, const LabeledGraph& big,
                             const LabeledGraph& small) {
  Instance inst = make_instance(n, big, small);
  SamplingMap sm;
  sm.source = std::move(inst.big);
  sm.target = std::move(inst.small);

  if (sm.source.blocks == sm.target.blocks) {
    sm.assignment.resize(sm.source.blocks.size());
    for (size_t i = 0; i < sm.assignment.size(); ++i)
      sm.assignment[i] = static_cast<int>(i);
    return sm;
  }
  if (inst.r != 0)
    throw Nonexistence(nonexistence_message(
        Instance{sm.source, sm.target, inst.q, inst.r}));
  const long long lambda = to_small(inst.q, "redundancy");

  ContainmentGraph cg = build_containment(sm.source, sm.target);
  biregular_degrees(cg);
  const ReplicatedGraph rg = replicate(cg, 1, lambda);
  const BipartiteGraph bg = rg.to_bipartite();
  const Matching m = full_matching(bg);
  assert(m.size == sm.source.size());

  sm.assignment.resize(sm.source.blocks.size());
  for (size_t i = 0; i < sm.assignment.size(); ++i)
    sm.assignment[i] = static_cast<int>(m.match_left[i] / lambda);

  const auto profile = verify_sampling(sm);
  assert(profile.kind == RedundancyProfile::Kind::regular &&
         profile.min == lambda);
  (void)profile;
  return sm;
}

EmbeddingMap regular_embedding(int n, const LabeledGraph& small,
                               const LabeledGraph& big) {
  // Same containment graph as sampling, opposite counting: the small
  // design must split evenly over the big one.
  if (!has_copy(big.compacted(), small))
    throw Error("small pattern is not a subgraph of the big one; "
                "no embedding can exist");
  EmbeddingMap em;
  em.source = complete_design(n, small);
  em.target = complete_design(n, big);

  if (em.source.blocks == em.target.blocks) {
    em.assignment.resize(em.source.blocks.size());
    for (size_t i = 0; i < em.assignment.size(); ++i)
      em.assignment[i] = static_cast<int>(i);
    em.strict = true;
    return em;
  }

  BigInt q, r;
  boost::multiprecision::divide_qr(BigInt(em.source.size()),
                                   BigInt(em.target.size()), q, r);
  if (r != 0) {
    std::ostringstream os;
    os << "no regular embedding: " << em.source.size() << " = " << q << "*"
       << em.target.size() << " + " << r;
    throw Nonexistence(os.str());
  }
  const long long lambda = to_small(q, "redundancy");

  ContainmentGraph cg = build_containment(em.target, em.source);
  biregular_degrees(cg);
  const ReplicatedGraph rg = replicate(cg, lambda, 1);
  const BipartiteGraph bg = rg.to_bipartite();
  const Matching m = full_matching(bg);
  assert(m.size == em.source.size());

  em.assignment.resize(em.source.blocks.size());
  for (size_t j = 0; j < em.assignment.size(); ++j)
    em.assignment[j] = static_cast<int>(m.match_right[j] / lambda);
  em.strict = lambda == 1;

  const auto profile = verify_embedding(em);
  assert(profile.kind == RedundancyProfile::Kind::regular &&
         profile.min == lambda);
  (void)profile;
  return em;
}

SamplingMap floor_sampling(int n, const LabeledGraph& big,
                           const LabeledGraph& small) {
  Instance inst = make_instance(n, big, small);
  SamplingMap sm;
  sm.source = std::move(inst.big);
  sm.target = std::move(inst.small);

  if (sm.source.blocks == sm.target.blocks) {
    sm.assignment.resize(sm.source.blocks.size());
    for (size_t i = 0; i < sm.assignment.size(); ++i)
      sm.assignment[i] = static_cast<int>(i);
    return sm;
  }
  if (inst.q < 1)
    throw Nonexistence(
        "no sampling: big design smaller than small design, surjectivity "
        "impossible");
  const long long lambda = to_small(inst.q, "redundancy");

  ContainmentGraph cg = build_containment(sm.source, sm.target);
  biregular_degrees(cg);
  const ReplicatedGraph rg = replicate(cg, 1, lambda);
  const BipartiteGraph bg = rg.to_bipartite();
  const Matching m = full_matching(bg);
  assert(m.size == lambda * sm.target.size());

  sm.assignment.assign(sm.source.blocks.size(), -1);
  for (int idx = 0; idx < bg.n_right; ++idx) {
    const int u = m.match_right[idx];
    assert(u >= 0);
    sm.assignment[u] = static_cast<int>(idx / lambda);
  }
  // Leftover sources keep the smallest contained target by key; right
  // blocks are key-sorted, so that is the first neighbour.
  for (size_t i = 0; i < sm.assignment.size(); ++i)
    if (sm.assignment[i] == -1) {
      assert(!cg.graph.adj[i].empty());
      sm.assignment[i] = cg.graph.adj[i].front();
    }

  const auto profile = verify_sampling(sm);
  assert(profile.min >= lambda);
  (void)profile;
  return sm;
}

SamplingMap semiregular_sampling(int n, const LabeledGraph& big,
                                 const LabeledGraph& small) {
  Instance inst = make_instance(n, big, small);
  SamplingMap sm;
  sm.source = std::move(inst.big);
  sm.target = std::move(inst.small);

  // A (1,2)-semiregular sampling has |target| + #doubled = |source| with
  // 0 < #doubled < |target|, so the surplus pins its shape exactly.
  const long long surplus = sm.source.size() - sm.target.size();
  if (surplus <= 0)
    throw Nonexistence(
        "no (1,2)-semiregular sampling: big design not strictly larger");
  if (surplus >= sm.target.size())
    throw Nonexistence("no (1,2)-semiregular sampling: surplus " +
                       std::to_string(surplus) +
                       " reaches the small design size " +
                       std::to_string(sm.target.size()));

  ContainmentGraph cg = build_containment(sm.source, sm.target);
  const auto [d, e] = biregular_degrees(cg);
  // Existence bound: |big| (e + r - 1) > e r^2.
  if (BigInt(sm.source.size()) * (e + surplus - 1) <=
      BigInt(e) * surplus * surplus)
    throw Error("size bound violated: need |big|*(e+r-1) > e*r^2 with e=" +
                std::to_string(e) + ", r=" + std::to_string(surplus));

  const Matching m = full_matching(cg.graph);
  assert(m.size == sm.target.size());
  sm.assignment.assign(sm.source.blocks.size(), -1);
  for (int j = 0; j < cg.graph.n_right; ++j)
    sm.assignment[m.match_right[j]] = j;

  // Residual graph on the unmatched sources; every target lost its
  // matched edge, so residual right degrees stay below e.
  std::vector<int> rest;
  for (int u = 0; u < cg.graph.n_left; ++u)
    if (m.match_left[u] == -1) rest.push_back(u);
  assert(static_cast<long long>(rest.size()) == surplus);

  BipartiteGraph residual;
  residual.n_left = static_cast<int>(rest.size());
  residual.n_right = cg.graph.n_right;
  residual.adj.resize(rest.size());
  for (size_t k = 0; k < rest.size(); ++k) residual.adj[k] = cg.graph.adj[rest[k]];
  for (int deg : residual.right_degrees()) {
    assert(deg <= e - 1);
    (void)deg;
  }
  // Degree bound that guarantees a colour class covering all of rest:
  // d > (r-1)(e-1)/r.
  assert(BigInt(d) * surplus > BigInt(surplus - 1) * (e - 1));

  const EdgeColoring colouring = bipartite_edge_coloring(residual);
  assert(colouring.num_colors <= e - 1);
  int cover = -1;
  for (int c = 0; c < colouring.num_colors && cover == -1; ++c) {
    bool covers = true;
    for (int u = 0; u < residual.n_left && covers; ++u)
      covers = std::find(colouring.color_of[u].begin(),
                         colouring.color_of[u].end(),
                         c) != colouring.color_of[u].end();
    if (covers) cover = c;
  }
  assert(cover != -1);

  for (int u = 0; u < residual.n_left; ++u) {
    const auto& colors = colouring.color_of[u];
    const auto it = std::find(colors.begin(), colors.end(), cover);
    sm.assignment[rest[u]] = residual.adj[u][it - colors.begin()];
  }

  const auto profile = verify_sampling(sm);
  assert(profile.kind == RedundancyProfile::Kind::semiregular &&
         profile.min == 1 && profile.max == 2 &&
         profile.histogram.at(2) == surplus);
  (void)profile;
  return sm;
}

SamplingMap compose(const SamplingMap& first, const SamplingMap& second) {
  if (first.target != second.source)
    throw Error("composition mismatch: first.target differs from "
                "second.source");
  SamplingMap out;
  out.source = first.source;
  out.target = second.target;
  out.assignment.resize(first.assignment.size());
  for (size_t i = 0; i < first.assignment.size(); ++i)
    out.assignment[i] = second.assignment[first.assignment[i]];
  verify_sampling(out);
  return out;
}

EmbeddingMap embedding_from_sampling(const SamplingMap& sm) {
  const auto profile = verify_sampling(sm);
  if (profile.max != 1)
    throw Error("only bijective samplings invert to embeddings");
  EmbeddingMap em;
  em.source = sm.target;
  em.target = sm.source;
  em.assignment.resize(sm.target.blocks.size());
  for (size_t i = 0; i < sm.assignment.size(); ++i)
    em.assignment[sm.assignment[i]] = static_cast<int>(i);
  em.strict = true;
  verify_embedding(em);
  return em;
}

}  // namespace designs
