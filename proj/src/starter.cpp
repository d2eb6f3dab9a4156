#include "designs/starter.hpp"

#include <algorithm>
#include <set>

#include "designs/counting.hpp"
#include "designs/errors.hpp"

namespace designs {

namespace {

std::array<int, 3> sorted_triple(const std::array<int, 3>& t) {
  std::array<int, 3> s = t;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

std::vector<std::array<int, 3>> TripleStarter::all() const {
  std::vector<std::array<int, 3>> out;
  std::set<std::array<int, 3>> seen;
  for (const auto* family : {&t1, &t2, &t3, &t4})
    for (const auto& triple : *family)
      if (seen.insert(sorted_triple(triple)).second) out.push_back(triple);
  return out;
}

std::vector<RepAssignment> TripleStarter::rule() const {
  std::vector<RepAssignment> rows;
  for (const auto& triple : all()) {
    RepAssignment row;
    row.block = subset_block(n, {triple[0], triple[1], triple[2]});
    row.image = subset_block(n, {triple[0], triple[1]});
    rows.push_back(std::move(row));
  }
  return rows;
}

TripleStarter triple_starter(int n) {
  if (n < 5 || n % 3 != 2)
    throw Error("triple starter needs n = 2 (mod 3), n >= 5, got " +
                std::to_string(n));
  TripleStarter st;
  st.n = n;
  st.lambda = (n - 2) / 3;
  st.v = n / 2;
  st.even = n % 2 == 0;
  const int lambda = static_cast<int>(st.lambda);
  const int v = st.v;

  for (int i = 1; i <= lambda + 1; ++i)
    for (int t = 1; t <= lambda; ++t) st.t1.push_back({0, i, i + t});
  for (int l = lambda + 2; l <= v - 1; ++l) {
    for (int m = l + 1; m <= 2 * lambda + 1; ++m) st.t2.push_back({0, l, m});
    for (int u = 1; u <= l - lambda - 1; ++u) st.t3.push_back({0, l, u});
  }
  if (st.even) {
    for (int p = 1; p <= lambda / 2; ++p) st.t4.push_back({0, v, p});
  } else {
    for (int u = 1; u <= v - lambda - 1; ++u) st.t4.push_back({0, v, u});
    for (int u = v + 1; u <= 2 * lambda + 1; ++u) st.t4.push_back({0, v, u});
  }
  return st;
}

LiftedSampling triple_sampling(int n) {
  const TripleStarter st = triple_starter(n);
  const PermutationGroup G = make_group(GroupKind::cyclic, n);
  const OrbitDecomposition big =
      orbits(G, complete_design(n, complete_graph(3)).blocks);
  const OrbitDecomposition small =
      orbits(G, complete_design(n, complete_graph(2)).blocks);
  return lift_sampling(G, big, small, st.rule());
}

}  // namespace designs
