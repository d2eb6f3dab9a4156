#include "designs/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

#include "designs/errors.hpp"

namespace designs {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  for (int i = 0; i < n; ++i) p.images[i] = i;
  return p;
}

Permutation Permutation::compose(const Permutation& then) const {
  assert(degree() == then.degree());
  Permutation out;
  out.images.resize(images.size());
  for (size_t i = 0; i < images.size(); ++i)
    out.images[i] = then.images[images[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images.resize(images.size());
  for (size_t i = 0; i < images.size(); ++i)
    out.images[images[i]] = static_cast<int>(i);
  return out;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < images.size(); ++i)
    if (images[i] != static_cast<int>(i)) return false;
  return true;
}

LabeledGraph apply_permutation(const Permutation& p, const LabeledGraph& g) {
  assert(p.degree() == g.order());
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(p(u), p(v));
  return LabeledGraph(g.order(), std::move(edges));
}

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::cyclic: return "cyclic";
    case GroupKind::affine_square: return "affine";
    case GroupKind::symmetric: return "symmetric";
    case GroupKind::custom: return "custom";
  }
  return "custom";
}

namespace {

std::vector<Permutation> close_under_product(
    int degree, const std::vector<Permutation>& generators,
    long long max_elements) {
  std::set<Permutation> seen;
  std::deque<Permutation> queue;
  const auto id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    const Permutation current = std::move(queue.front());
    queue.pop_front();
    for (const auto& gen : generators) {
      Permutation next = current.compose(gen);
      if (seen.insert(next).second) {
        if (static_cast<long long>(seen.size()) > max_elements)
          throw Error("group too large to materialize");
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

PermutationGroup PermutationGroup::from_generators(
    GroupKind kind, int degree, std::vector<Permutation> generators,
    long long max_elements) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw Error("generator degree mismatch");

  PermutationGroup out;
  out.kind_ = kind;
  out.degree_ = degree;

  // Large generator lists (e.g. a fully enumerated automorphism group)
  // are first thinned to a small generating set, so the closure below
  // touches each element only #generators times.
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  std::vector<Permutation> small;
  std::set<Permutation> closure;
  closure.insert(Permutation::identity(degree));
  for (const auto& g : generators) {
    if (g.is_identity() || closure.count(g)) continue;
    small.push_back(g);
    auto closed = close_under_product(degree, small, max_elements);
    closure = std::set<Permutation>(closed.begin(), closed.end());
  }
  out.generators_ = std::move(small);
  out.elements_ = {closure.begin(), closure.end()};
  return out;
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

}  // namespace designs
