#pragma once

#include <array>
#include <vector>

#include "designs/groups.hpp"

namespace designs {

// A set of base triples {0, l, m}, one per Z_n-orbit of 3-subsets, with
// the sampled pair {0, l} read off the stored order.  Requires n = 2
// (mod 3), n >= 5; lambda = (n-2)/3, v = floor(n/2).
//
//   t1 : {0, i, i+t}        i = 1..lambda+1, t = 1..lambda
//   t2 : {0, l, m}          l = lambda+2..v-1, m = l+1..2*lambda+1
//   t3 : {0, l, u}          l = lambda+2..v-1, u = 1..l-lambda-1
//   t4 : n odd  {0, v, u}   u = 1..v-lambda-1 and v+1..2*lambda+1
//        n even {0, v, p}   p = 1..lambda/2
//
// The families can overlap for very small n (n = 5 repeats {0,2,3} with
// the same sampled pair); the union is deduplicated.
struct TripleStarter {
  int n = 0;
  long long lambda = 0;
  int v = 0;
  bool even = false;  // t4 taken from the even-n variant
  std::vector<std::array<int, 3>> t1, t2, t3, t4;

  std::vector<std::array<int, 3>> all() const;  // deduplicated union
  // Rule rows: triple block {0,l,m} -> pair block {0,l}.
  std::vector<RepAssignment> rule() const;
};

TripleStarter triple_starter(int n);

// The lift of the starter rule through Z_n: a regular sampling of the
// complete triple design K_n(K_3) onto K_n(K_2) with redundancy (n-2)/3.
LiftedSampling triple_sampling(int n);

}  // namespace designs
