#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "renorm/linmap.hpp"
#include "renorm/modes.hpp"
#include "renorm/permutation.hpp"
#include "renorm/rational.hpp"

namespace renorm {

/// Composition (c_1, ..., c_k) of its weight; indexes the basis element
/// B_C = p_{c_1} * ... * p_{c_k} of the descent algebra. The empty composition is the unit.
///
/// Ordered by weight, then length, then lexicographically: within one weight
/// coarser compositions come first, which makes every refinement expansion
/// upper unitriangular.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  /// "1,2" (the unit is "").
  static Composition parse(std::string_view code);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  std::string code() const;
  /// Partial sums c_1, c_1+c_2, ... below the weight, as a bit mask (bit i-1 for i).
  std::uint32_t partial_sum_mask() const;
  static Composition from_mask(std::uint32_t mask, int weight);

  friend Composition operator+(const Composition& a, const Composition& b);  // concatenation
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);
  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All compositions of n, in Composition order.
std::vector<Composition> compositions_of(int n);

/// Element of the descent algebra in the composition basis.
class DescentElement {
 public:
  DescentElement() = default;
  DescentElement(const Composition& c, const Rational& coeff = 1);  // NOLINT

  static DescentElement unit() { return DescentElement(Composition{}); }
  /// p_n = B_(n).
  static DescentElement projection(int n);

  const std::map<Composition, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Composition& c) const;
  DescentElement component(int weight) const;
  DescentElement truncated(int max_weight) const;
  int max_weight() const { return terms_.empty() ? -1 : terms_.rbegin()->first.weight(); }
  /// Weight shared by all terms; throws NotHomogeneous otherwise (and for zero).
  int homogeneous_weight() const;

  void add(const Composition& c, const Rational& coeff);
  DescentElement& operator+=(const DescentElement& other);
  DescentElement& operator-=(const DescentElement& other);
  DescentElement& operator*=(const Rational& s);
  DescentElement operator-() const;
  friend DescentElement operator+(DescentElement a, const DescentElement& b) { return a += b; }
  friend DescentElement operator-(DescentElement a, const DescentElement& b) { return a -= b; }
  friend DescentElement operator*(DescentElement a, const Rational& s) { return a *= s; }
  friend DescentElement operator*(const Rational& s, DescentElement a) { return a *= s; }
  /// Convolution product: concatenation of compositions.
  friend DescentElement operator*(const DescentElement& a, const DescentElement& b);
  friend bool operator==(const DescentElement& a, const DescentElement& b) { return a.terms_ == b.terms_; }

  /// "1·(2) − 1/2·(1,1)", coarse compositions first.
  std::string to_string() const;

 private:
  std::map<Composition, Rational> terms_;
};

inline DescentElement d_convolve(const DescentElement& a, const DescentElement& b) { return a * b; }
/// Convolution product with every weight above max_weight dropped.
DescentElement d_convolve(const DescentElement& a, const DescentElement& b, int max_weight);

using DescentTensor = std::map<std::pair<Composition, Composition>, Rational>;

/// Algebra morphism for * with delta(p_n) = sum_{i=0..n} p_i (x) p_{n-i}.
DescentTensor d_coproduct(const DescentElement& a);
/// delta(a) = a (x) 1 + 1 (x) a.
bool is_primitive(const DescentElement& a);

/// Convolution logarithm; the weight-0 part must be the unit.
DescentElement d_log(const DescentElement& a, int max_weight);
/// Convolution exponential; the weight-0 part must vanish.
DescentElement d_exp(const DescentElement& a, int max_weight);

/// Id = unit + B_(1) + ... + B_(N).
DescentElement identity_series(int max_weight);
/// Convolution inverse of identity_series.
DescentElement antipode_series(int max_weight);

/// Zassenhaus elements of weights 1..N (entry n-1 has weight n).
///
/// Left:  Id = exp(Z_1) * exp(Z_2) * ...
/// Right: Id = ... * exp(Z~_2) * exp(Z~_1)
/// Accelerated variants group the factors into the blocks [2^(m-1), 2^m - 1];
/// the returned list still holds one homogeneous element per weight.
std::vector<DescentElement> zassenhaus(int max_weight, Side side, ExpMode mode);

/// Dynkin elements D_n = sum_{i+j=n} S_i * (j B_(j)), n = 1..N.
std::vector<DescentElement> dynkin(int max_weight);

/// Solomon realization: B_C maps to the sum of the permutations whose
/// descent set lies in the partial-sum set of C. `a` must be homogeneous of weight n.
PermutationElement to_permutations(const DescentElement& a, int n);
/// Inverse of to_permutations; throws InvalidArgument when `p` is not in the image.
DescentElement from_permutations(const PermutationElement& p);

/// Composition product inside D_n (a o b: apply b, then a), computed in Q[S_n].
DescentElement internal_product(const DescentElement& a, const DescentElement& b);

/// Action of a homogeneous element on a word of the tensor algebra T(X).
///
/// Elements of D live in End(T*(X)) where sigma(y_1...y_n) = y_{s^-1(1)}...y_{s^-1(n)};
/// on T(X) we apply the transpose, sigma acting as y_1...y_n -> y_{s(1)}...y_{s(n)}.
/// With this convention D_n is the left-normed bracket and the Zassenhaus
/// elements land in Lie(X).
TensorElement act_on_word(const DescentElement& a, const Word& w);
TensorElement act_on_word(const PermutationElement& p, const Word& w);

/// Image of `a` in End(H): alpha_H(B_C) = p^H_{c_1} * ... * p^H_{c_k}.
HopfEndo alpha_H(const DescentElement& a, const BasisPtr& basis);

/// Product of generators along a composition: gen_{i_1} * ... * gen_{i_k}
/// (generators[i-1] has weight i).
DescentElement word_product(const std::vector<DescentElement>& generators, const Composition& word);

/// Coefficients of `target` (homogeneous) in the basis of generator words,
/// solved by back-substitution; generators[i-1] must have weight i with a
/// nonzero B_(i) coefficient.
std::map<Composition, Rational> expand_in_words(const DescentElement& target,
                                                const std::vector<DescentElement>& generators);

/// Matrix of generator words against the B basis at weight n: rows and
/// columns both indexed by compositions_of(n). True when it is upper
/// triangular with unit diagonal.
bool words_unitriangular(const std::vector<DescentElement>& generators, int n);

/// Dynkin elements in right-Zassenhaus words, and left-Zassenhaus elements in Dynkin words.
struct ChangeOfBasis {
  int max_weight = 0;
  std::vector<std::map<Composition, Rational>> dynkin_in_right_zassenhaus;
  std::vector<std::map<Composition, Rational>> left_zassenhaus_in_dynkin;
};

ChangeOfBasis change_of_basis(int max_weight);

}  // namespace renorm
