#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace renorm {

/// Unlabelled rooted tree in canonical form: a root with a sorted multiset of
/// canonical subtrees. Isomorphic trees compare equal.
///
/// Trees are ordered by vertex count, then lexicographically by their sorted
/// child lists. The text code nests brackets: "[]" is the single vertex,
/// "[[]]" the two-vertex ladder, "[[],[]]" the cherry.
class RootedTree {
 public:
  /// The single vertex.
  RootedTree() = default;
  /// Grafts `children` onto a new root (B+), canonicalizing their order.
  explicit RootedTree(std::vector<RootedTree> children);

  /// Linear chain of n >= 1 vertices.
  static RootedTree ladder(int n);
  static RootedTree parse(std::string_view code);

  int degree() const { return degree_; }
  const std::vector<RootedTree>& children() const { return children_; }
  bool is_ladder() const;
  std::string code() const;

  friend std::strong_ordering operator<=>(const RootedTree& a, const RootedTree& b);
  friend bool operator==(const RootedTree& a, const RootedTree& b) { return (a <=> b) == 0; }

 private:
  std::vector<RootedTree> children_;
  int degree_ = 1;
};

/// Every canonical rooted tree with exactly n vertices, ascending.
std::vector<RootedTree> trees_of_degree(int n);

}  // namespace renorm
