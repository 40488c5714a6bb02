#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "renorm/rational.hpp"
#include "renorm/rooted_tree.hpp"

namespace renorm {

/// Which graded connected commutative Hopf algebra stands in for the Feynman graphs.
enum class TreeFamily {
  RootedTrees,  ///< polynomial algebra on all rooted trees, admissible-cut coproduct
  Ladders,      ///< sub-Hopf algebra generated by the ladders
};

std::string to_string(TreeFamily family);
/// Accepts "rooted_trees" / "rooted-trees" and "ladders" / "ladders-only".
TreeFamily parse_family(std::string_view name);
/// Largest supported truncation: 6 for rooted trees, 8 for ladders;
/// RENORM_MAX_DEGREE overrides both.
int degree_cap(TreeFamily family);

/// Commutative monomial: a sorted multiset of rooted trees. The empty forest is the unit.
///
/// Forests order by degree, then number of trees, then lexicographically.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<RootedTree> trees);
  Forest(const RootedTree& tree) : trees_{tree}, degree_(tree.degree()) {}  // NOLINT

  /// Comma-joined tree codes; the unit is "" (also accepts "1").
  static Forest parse(std::string_view code);

  const std::vector<RootedTree>& trees() const { return trees_; }
  int degree() const { return degree_; }
  bool is_unit() const { return trees_.empty(); }
  bool is_tree() const { return trees_.size() == 1; }
  std::string code() const;

  friend Forest operator*(const Forest& a, const Forest& b);
  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b);
  friend bool operator==(const Forest& a, const Forest& b) { return (a <=> b) == 0; }

 private:
  std::vector<RootedTree> trees_;
  int degree_ = 0;
};

/// Rational linear combination of forests; zero coefficients are never stored.
class HopfElement {
 public:
  HopfElement() = default;
  HopfElement(const Forest& f, const Rational& c = 1);  // NOLINT

  static HopfElement unit() { return HopfElement(Forest{}); }

  const std::map<Forest, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Forest& f) const;
  /// Degree-n homogeneous part.
  HopfElement component(int n) const;
  /// Largest degree present, -1 for zero.
  int max_degree() const;

  void add(const Forest& f, const Rational& c);
  HopfElement& operator+=(const HopfElement& other);
  HopfElement& operator-=(const HopfElement& other);
  HopfElement& operator*=(const Rational& s);
  HopfElement operator-() const;

  friend HopfElement operator+(HopfElement a, const HopfElement& b) { return a += b; }
  friend HopfElement operator-(HopfElement a, const HopfElement& b) { return a -= b; }
  friend HopfElement operator*(HopfElement a, const Rational& s) { return a *= s; }
  friend HopfElement operator*(const Rational& s, HopfElement a) { return a *= s; }
  /// The algebra product m: bilinear multiset union.
  friend HopfElement operator*(const HopfElement& a, const HopfElement& b);
  friend bool operator==(const HopfElement& a, const HopfElement& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::map<Forest, Rational> terms_;
};

inline HopfElement product(const HopfElement& a, const HopfElement& b) { return a * b; }

/// Element of H (x) H.
class HopfTensor {
 public:
  using Key = std::pair<Forest, Forest>;

  const std::map<Key, Rational>& terms() const { return terms_; }
  void add(const Forest& left, const Forest& right, const Rational& c);
  HopfTensor& operator+=(const HopfTensor& other);
  /// Product in the tensor-product algebra.
  friend HopfTensor operator*(const HopfTensor& a, const HopfTensor& b);
  friend bool operator==(const HopfTensor& a, const HopfTensor& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Key, Rational> terms_;
};

/// Admissible-cut coproduct of a single tree: the pruned forest goes left,
/// the trunk containing the root goes right. Includes t(x)1 and 1(x)t.
HopfTensor coproduct(const RootedTree& t);
/// Multiplicative extension to forests; Delta(1) = 1(x)1.
HopfTensor coproduct(const Forest& f);
HopfTensor coproduct(const HopfElement& x);

/// Connected-graded antipode, S(f) = -f - sum S(f') f'' over the reduced coproduct.
HopfElement antipode(const HopfElement& x);
HopfElement antipode(const Forest& f);

/// (Delta (x) id) applied to a tensor, giving H(x)H(x)H as nested pairs.
std::map<std::pair<std::pair<Forest, Forest>, Forest>, Rational> coassoc_left(const HopfTensor& t);
/// (id (x) Delta) applied to a tensor.
std::map<std::pair<std::pair<Forest, Forest>, Forest>, Rational> coassoc_right(const HopfTensor& t);

/// m o (S (x) id) and m o (id (x) S) applied to a tensor.
HopfElement antipode_left_convolution(const HopfTensor& t);
HopfElement antipode_right_convolution(const HopfTensor& t);

/// All canonical forests of degree n in the family, in Forest order, no duplicates.
std::vector<Forest> enumerate_basis(int n, TreeFamily family);

}  // namespace renorm
