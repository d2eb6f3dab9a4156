#include "designs/counting.hpp"

#include <algorithm>
#include <cctype>

#include "designs/errors.hpp"

namespace designs {

BigInt factorial(int n) {
  if (n < 0) throw Error("factorial of negative value");
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;  // exact: out is C(n-k+i, i) after this step
  }
  return out;
}

LabeledGraph PatternFamily::graph() const {
  switch (kind) {
    case FamilyKind::complete: return complete_graph(order);
    case FamilyKind::cycle: return cycle_graph(order);
    case FamilyKind::path: return path_graph(order);
    case FamilyKind::star: return star_graph(order);
    case FamilyKind::wheel: return wheel_graph(order);
  }
  throw Error("unknown family kind");
}

std::string PatternFamily::name() const {
  char letter = '?';
  switch (kind) {
    case FamilyKind::complete: letter = 'K'; break;
    case FamilyKind::cycle: letter = 'C'; break;
    case FamilyKind::path: letter = 'P'; break;
    case FamilyKind::star: letter = 'S'; break;
    case FamilyKind::wheel: letter = 'W'; break;
  }
  return letter + std::to_string(order);
}

PatternFamily parse_family(const std::string& text) {
  if (text.size() < 2) throw Error("pattern '" + text + "' not recognized");
  FamilyKind kind;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'K': kind = FamilyKind::complete; break;
    case 'C': kind = FamilyKind::cycle; break;
    case 'P': kind = FamilyKind::path; break;
    case 'S': kind = FamilyKind::star; break;
    case 'W': kind = FamilyKind::wheel; break;
    default: throw Error("pattern '" + text + "' not recognized");
  }
  for (size_t i = 1; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error("pattern '" + text + "' not recognized");
  const int order = std::stoi(text.substr(1));
  int min_order = 2;
  if (kind == FamilyKind::cycle) min_order = 3;
  if (kind == FamilyKind::wheel) min_order = 4;
  if (order < min_order)
    throw Error("pattern '" + text + "' below the smallest legal order");
  PatternFamily fam{kind, order};
  fam.graph();  // validates
  return fam;
}

std::optional<PatternFamily> recognize_counted_family(const LabeledGraph& g) {
  const LabeledGraph t = g.compacted();
  const int k = t.order();
  if (t.edge_count() == 0 || k < 2) return std::nullopt;
  const auto deg = t.degrees();

  if (t.edge_count() == k * (k - 1) / 2 && k >= 2)
    return PatternFamily{FamilyKind::complete, k};

  const bool all_two = std::all_of(deg.begin(), deg.end(),
                                   [](int d) { return d == 2; });
  if (k >= 3 && t.edge_count() == k && all_two &&
      is_isomorphic(t, cycle_graph(k)))
    return PatternFamily{FamilyKind::cycle, k};

  if (k >= 2 && t.edge_count() == k - 1 &&
      std::count(deg.begin(), deg.end(), 1) == 2 &&
      std::count(deg.begin(), deg.end(), 2) == k - 2 &&
      is_isomorphic(t, path_graph(k)))
    return PatternFamily{FamilyKind::path, k};

  return std::nullopt;
}

BigInt closed_form_count(int n, const PatternFamily& family) {
  if (n < 0) throw Error("negative host order");
  switch (family.kind) {
    case FamilyKind::complete:
      if (family.order < 2) throw Error("complete family order below 2");
      return binomial(n, family.order);
    case FamilyKind::cycle:
      if (family.order < 3) throw Error("cycle family order below 3");
      return binomial(n, family.order) * factorial(family.order - 1) / 2;
    case FamilyKind::path:
      if (family.order < 2) throw Error("path family order below 2");
      return binomial(n, family.order) * factorial(family.order) / 2;
    case FamilyKind::star:
    case FamilyKind::wheel:
      throw Error("no closed form for " + family.name() +
                  "; use enumeration");
  }
  throw Error("unknown family kind");
}

BigInt pattern_count(int n, const LabeledGraph& pattern) {
  if (const auto fam = recognize_counted_family(pattern))
    return closed_form_count(n, *fam);
  const LabeledGraph t = pattern.compacted();
  if (t.order() > n) return 0;
  return static_cast<long long>(
      enumerate_copies(complete_graph(n), t).size());
}

}  // namespace designs
