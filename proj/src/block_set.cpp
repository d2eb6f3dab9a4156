#include "designs/block_set.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "designs/errors.hpp"

namespace designs {

BlockSet complete_design(int n, const LabeledGraph& pattern) {
  if (pattern.edge_count() == 0) throw Error("pattern has no edges");
  if (pattern.compacted().order() > n)
    throw Error("pattern does not fit in a host of order " +
                std::to_string(n));
  BlockSet out;
  out.host = complete_graph(n);
  out.blocks = enumerate_copies(out.host, pattern.compacted());
  const long long covering =
      out.size() * pattern.edge_count();
  const long long host_edges = static_cast<long long>(n) * (n - 1) / 2;
  // Every edge of K_n lies in the same number of copies.
  assert(covering % host_edges == 0);
  out.multiplicity = covering / host_edges;
  return out;
}

BlockSet copies_design(const LabeledGraph& host, const LabeledGraph& pattern) {
  if (pattern.edge_count() == 0) throw Error("pattern has no edges");
  BlockSet out;
  out.host = host;
  out.blocks = enumerate_copies(host, pattern);
  out.multiplicity = 1;
  return out;
}

std::string DesignReport::summary() const {
  std::ostringstream os;
  if (ok) {
    os << "design with multiplicity " << multiplicity;
  } else {
    os << "not a design with multiplicity " << multiplicity << ": "
       << defects.size() << " defective edge(s)";
    for (size_t i = 0; i < defects.size() && i < 5; ++i)
      os << " {" << defects[i].u << "," << defects[i].v
         << "}x" << defects[i].count;
  }
  return os.str();
}

DesignReport verify_design(const BlockSet& bs) {
  DesignReport report;
  report.multiplicity = bs.multiplicity;
  std::map<std::pair<int, int>, long long> tally;
  for (const auto& [u, v] : bs.host.edges()) tally[{u, v}] = 0;
  for (const auto& block : bs.blocks) {
    if (!is_subgraph(block, bs.host)) {
      report.ok = false;
      report.defects.push_back({-1, -1, 0});
      return report;
    }
    for (const auto& e : block.edges()) ++tally[e];
  }
  for (const auto& [edge, count] : tally)
    if (count != bs.multiplicity)
      report.defects.push_back({edge.first, edge.second, count});
  report.ok = report.defects.empty();
  return report;
}

std::string Redundancy::summary() const {
  std::ostringstream os;
  os << big_count << " = " << quotient << "*" << small_count;
  if (remainder != 0) os << " + " << remainder;
  return os.str();
}

Redundancy required_redundancy(int n, const LabeledGraph& big,
                               const LabeledGraph& small) {
  if (big.compacted().order() > n)
    throw Error("big pattern does not fit in a host of order " +
                std::to_string(n));
  if (!has_copy(big.compacted(), small))
    throw Error("small pattern is not a subgraph of the big one; "
                "no sampling can exist");
  Redundancy out;
  out.big_count = pattern_count(n, big);
  out.small_count = pattern_count(n, small);
  if (out.small_count == 0) throw Error("small pattern has no copies");
  boost::multiprecision::divide_qr(out.big_count, out.small_count,
                                   out.quotient, out.remainder);
  return out;
}

}  // namespace designs
