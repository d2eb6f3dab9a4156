#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "designs/labeled_graph.hpp"

namespace designs {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);
BigInt binomial(int n, int k);

enum class FamilyKind { complete, cycle, path, star, wheel };

// A named pattern shape: complete K_k, cycle C_k, path P_h (h vertices),
// star on `order` vertices (order-1 rays), wheel on `order` vertices
// (rim of order-1).  `order` is the vertex count in every case.
struct PatternFamily {
  FamilyKind kind;
  int order;

  LabeledGraph graph() const;
  std::string name() const;  // K4, C5, P3, S4, W5
};

// Parses K4 / C5 / P3 / S4 / W5 shorthand; rejects orders below the
// smallest legal one (K >= 2, C >= 3, P >= 2, S >= 2, W >= 4).
PatternFamily parse_family(const std::string& text);

// The family a graph belongs to, if it is a complete graph, cycle or
// path after trimming isolated vertices.  Stars and wheels are not
// recognized; their counts always go through enumeration.
std::optional<PatternFamily> recognize_counted_family(const LabeledGraph& g);

// Number of subgraphs of K_n isomorphic to the family pattern:
//   complete K_k : C(n,k)
//   cycle C_k    : C(n,k) (k-1)!/2
//   path P_h     : C(n,h) h!/2
// Throws for star and wheel families.
BigInt closed_form_count(int n, const PatternFamily& family);

// closed_form_count when the pattern is a recognized family, otherwise
// |enumerate_copies(K_n, pattern)|.
BigInt pattern_count(int n, const LabeledGraph& pattern);

}  // namespace designs
