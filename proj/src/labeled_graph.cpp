#include "designs/labeled_graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "designs/errors.hpp"
#include "designs/permutation.hpp"

namespace designs {

namespace {

void check_vertex(int v, int n) {
  if (v < 0 || v >= n)
    throw Error("vertex " + std::to_string(v) + " out of range [0, " +
                std::to_string(n) + ")");
}

}  // namespace

LabeledGraph::LabeledGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw Error("negative vertex count");
  for (auto& [u, v] : edges_) {
    check_vertex(u, n);
    check_vertex(v, n);
    if (u == v) throw Error("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw Error("duplicate edge");
}

bool LabeledGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::pair{u, v});
}

std::vector<int> LabeledGraph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<int> LabeledGraph::support() const {
  std::vector<int> out;
  const auto deg = degrees();
  for (int v = 0; v < n_; ++v)
    if (deg[v] > 0) out.push_back(v);
  return out;
}

LabeledGraph LabeledGraph::trimmed() const {
  int top = 0;
  for (const auto& [u, v] : edges_) top = std::max(top, v + 1);
  return LabeledGraph(top, edges_);
}

LabeledGraph LabeledGraph::compacted() const {
  std::vector<int> label(n_, -1);
  int next = 0;
  for (int v : support()) label[v] = next++;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edges_.size());
  for (const auto& [u, v] : edges_) edges.emplace_back(label[u], label[v]);
  return LabeledGraph(next, std::move(edges));
}

CanonicalKey canonical_key(const LabeledGraph& g) {
  if (g.order() > 255) throw Error("canonical keys need order <= 255");
  std::string bytes;
  bytes.reserve(1 + 2 * g.edges().size());
  bytes.push_back(static_cast<char>(g.order()));
  for (const auto& [u, v] : g.edges()) {
    bytes.push_back(static_cast<char>(u));
    bytes.push_back(static_cast<char>(v));
  }
  return CanonicalKey{std::move(bytes)};
}

LabeledGraph complete_graph(int k) {
  if (k < 1) throw Error("complete graph needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  return LabeledGraph(k, std::move(edges));
}

LabeledGraph cycle_graph(int k) {
  if (k < 3) throw Error("cycle needs at least three vertices");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u + 1 < k; ++u) edges.emplace_back(u, u + 1);
  edges.emplace_back(0, k - 1);
  return LabeledGraph(k, std::move(edges));
}

LabeledGraph path_graph(int h) {
  if (h < 2) throw Error("path needs at least two vertices");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u + 1 < h; ++u) edges.emplace_back(u, u + 1);
  return LabeledGraph(h, std::move(edges));
}

LabeledGraph star_graph(int order) {
  if (order < 2) throw Error("star needs at least two vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < order; ++v) edges.emplace_back(0, v);
  return LabeledGraph(order, std::move(edges));
}

LabeledGraph wheel_graph(int order) {
  if (order < 4) throw Error("wheel needs at least four vertices");
  const int m = order - 1;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u + 1 < m; ++u) edges.emplace_back(u, u + 1);
  edges.emplace_back(0, m - 1);
  for (int u = 0; u < m; ++u) edges.emplace_back(u, m);
  return LabeledGraph(order, std::move(edges));
}

LabeledGraph subset_block(int n, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw Error("repeated vertex in subset");
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      edges.emplace_back(vertices[i], vertices[j]);
  return LabeledGraph(n, std::move(edges));
}

LabeledGraph cycle_block(int n, const std::vector<int>& vertices) {
  if (vertices.size() < 3) throw Error("cycle needs at least three vertices");
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < vertices.size(); ++i)
    edges.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
  return LabeledGraph(n, std::move(edges));
}

LabeledGraph path_block(int n, const std::vector<int>& vertices) {
  if (vertices.size() < 2) throw Error("path needs at least two vertices");
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i + 1 < vertices.size(); ++i)
    edges.emplace_back(vertices[i], vertices[i + 1]);
  return LabeledGraph(n, std::move(edges));
}

LabeledGraph star_block(int n, int centre, const std::vector<int>& leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int leaf : leaves) edges.emplace_back(centre, leaf);
  return LabeledGraph(n, std::move(edges));
}

bool is_subgraph(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.order() > b.order()) return false;
  return std::includes(b.edges().begin(), b.edges().end(), a.edges().begin(),
                       a.edges().end());
}

namespace {

// Backtracking over injective support maps pattern -> host that send
// pattern edges to host edges.  Pattern vertices are preordered so each
// one (after the first) touches an already placed vertex when possible.
class CopyMatcher {
 public:
  CopyMatcher(const LabeledGraph& host, const LabeledGraph& pattern)
      : host_(host) {
    if (host.order() > 64) throw Error("host order capped at 64");
    host_adj_.assign(host.order(), 0);
    for (const auto& [u, v] : host.edges()) {
      host_adj_[u] |= 1ULL << v;
      host_adj_[v] |= 1ULL << u;
    }
    host_deg_ = host.degrees();

    const auto support = pattern.support();
    const auto pdeg = pattern.degrees();
    std::vector<char> chosen(pattern.order(), 0);
    auto linked = [&](int v) {
      int count = 0;
      for (int u : order_)
        if (pattern.has_edge(u, v)) ++count;
      return count;
    };
    for (size_t k = 0; k < support.size(); ++k) {
      int best = -1;
      for (int v : support) {
        if (chosen[v]) continue;
        if (best == -1 || std::tuple(linked(v), pdeg[v], -v) >
                              std::tuple(linked(best), pdeg[best], -best))
          best = v;
      }
      chosen[best] = 1;
      order_.push_back(best);
    }
    parents_.resize(order_.size());
    pattern_deg_.resize(order_.size());
    for (size_t k = 0; k < order_.size(); ++k) {
      pattern_deg_[k] = pdeg[order_[k]];
      for (size_t j = 0; j < k; ++j)
        if (pattern.has_edge(order_[j], order_[k])) parents_[k].push_back(j);
    }
    pattern_edges_ = pattern.edges().size();
  }

  // Visits every edge-image set once per injective support map.
  template <typename Fn>
  void scan(Fn&& emit) {
    image_.assign(order_.size(), -1);
    scan_from(0, std::forward<Fn>(emit));
  }

  size_t support_size() const { return order_.size(); }
  size_t pattern_edge_count() const { return pattern_edges_; }

  // Edge images of the current full assignment.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(pattern_edges_);
    for (size_t k = 0; k < order_.size(); ++k)
      for (int j : parents_[k]) out.emplace_back(image_[j], image_[k]);
    return out;
  }

 private:
  template <typename Fn>
  void scan_from(size_t k, Fn&& emit) {
    if (k == order_.size()) {
      emit();
      return;
    }
    uint64_t candidates;
    if (parents_[k].empty()) {
      candidates = host_.order() == 64
                       ? ~0ULL
                       : ((1ULL << host_.order()) - 1);
    } else {
      candidates = ~0ULL;
      for (int j : parents_[k]) candidates &= host_adj_[image_[j]];
    }
    candidates &= ~used_;
    while (candidates) {
      const int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      if (host_deg_[v] < pattern_deg_[k]) continue;
      image_[k] = v;
      used_ |= 1ULL << v;
      scan_from(k + 1, emit);
      used_ &= ~(1ULL << v);
    }
    image_[k] = -1;
  }

  const LabeledGraph& host_;
  std::vector<uint64_t> host_adj_;
  std::vector<int> host_deg_;
  std::vector<int> order_;                 // pattern support, search order
  std::vector<std::vector<int>> parents_;  // earlier neighbours per position
  std::vector<int> pattern_deg_;
  size_t pattern_edges_ = 0;
  std::vector<int> image_;
  uint64_t used_ = 0;
};

}  // namespace

bool has_copy(const LabeledGraph& host, const LabeledGraph& pattern) {
  const LabeledGraph p = pattern.compacted();
  if (p.order() > host.order()) return false;
  if (p.edge_count() == 0) return true;
  CopyMatcher matcher(host, p);
  bool found = false;
  // No early exit needed at these sizes beyond the first hit flag.
  matcher.scan([&] { found = true; });
  return found;
}

std::vector<LabeledGraph> enumerate_copies(const LabeledGraph& host,
                                           const LabeledGraph& pattern) {
  if (pattern.order() > host.order())
    throw Error("pattern has more vertices than host");
  if (pattern.edge_count() == 0)
    return {LabeledGraph(host.order(), {})};
  CopyMatcher matcher(host, pattern);
  std::set<LabeledGraph> seen;
  matcher.scan([&] { seen.emplace(host.order(), matcher.edges()); });
  return {seen.begin(), seen.end()};
}

long long count_injective_copies(const LabeledGraph& host,
                                 const LabeledGraph& pattern) {
  if (pattern.order() > host.order()) return 0;
  if (pattern.edge_count() == 0) return 1;
  CopyMatcher matcher(host, pattern);
  long long count = 0;
  matcher.scan([&] { ++count; });
  return count;
}

namespace {

// Bijections a -> b preserving adjacency and non-adjacency.
template <typename Fn>
void scan_isomorphisms(const LabeledGraph& a, const LabeledGraph& b,
                       Fn&& emit) {
  const int n = a.order();
  const auto da = a.degrees(), db = b.degrees();
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  auto place = [&](auto&& self, int u) -> bool {
    if (u == n) return emit(image);
    for (int v = 0; v < n; ++v) {
      if (used[v] || da[u] != db[v]) continue;
      bool ok = true;
      for (int w = 0; w < u && ok; ++w)
        if (a.has_edge(w, u) != b.has_edge(image[w], v)) ok = false;
      if (!ok) continue;
      image[u] = v;
      used[v] = 1;
      if (self(self, u + 1)) return true;
      used[v] = 0;
    }
    image[u] = -1;
    return false;
  };
  place(place, 0);
}

}  // namespace

bool is_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  bool found = false;
  scan_isomorphisms(a, b, [&](const std::vector<int>&) {
    found = true;
    return true;  // stop
  });
  return found;
}

PermutationGroup graph_automorphisms(const LabeledGraph& g, int max_order) {
  if (g.order() > max_order)
    throw Error("graph order " + std::to_string(g.order()) +
                " exceeds automorphism bound " + std::to_string(max_order));
  constexpr long long kMaxElements = 1000000;
  std::vector<Permutation> elements;
  scan_isomorphisms(g, g, [&](const std::vector<int>& image) {
    elements.push_back(Permutation{image});
    if (static_cast<long long>(elements.size()) > kMaxElements)
      throw Error("automorphism group too large to materialize");
    return false;  // keep scanning
  });
  assert(!elements.empty());
  return PermutationGroup::from_generators(GroupKind::custom, g.order(),
                                           std::move(elements));
}

}  // namespace designs
