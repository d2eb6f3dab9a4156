#pragma once

#include <compare>
#include <string>
#include <vector>

#include "designs/labeled_graph.hpp"

namespace designs {

// A permutation of 0..n-1; images[i] is the image of i.
struct Permutation {
  std::vector<int> images;

  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int x) const { return images[x]; }
  auto operator<=>(const Permutation&) const = default;

  static Permutation identity(int n);
  Permutation compose(const Permutation& then) const;  // x -> then(this(x))
  Permutation inverse() const;
  bool is_identity() const;
};

LabeledGraph apply_permutation(const Permutation& p, const LabeledGraph& g);

enum class GroupKind { cyclic, affine_square, symmetric, custom };

std::string to_string(GroupKind kind);

// A permutation group on 0..degree-1 with every element materialized.
// Elements are sorted, so iteration order is reproducible.
class PermutationGroup {
 public:
  PermutationGroup() = default;

  // Closure of the generators; throws if it exceeds max_elements.
  static PermutationGroup from_generators(GroupKind kind, int degree,
                                          std::vector<Permutation> generators,
                                          long long max_elements = 1000000);

  GroupKind kind() const { return kind_; }
  int degree() const { return degree_; }
  long long order() const { return static_cast<long long>(elements_.size()); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& p) const;

 private:
  GroupKind kind_ = GroupKind::custom;
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

}  // namespace designs
