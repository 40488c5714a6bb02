#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "renorm/rational.hpp"

namespace renorm {

/// One-line notation: perm[i-1] = sigma(i), values 1..n.
using Permutation = std::vector<int>;

/// Largest n for which permutation expansions are allowed (8 unless
/// RENORM_MAX_DEGREE says otherwise).
int permutation_cap();

/// Bit i-1 is set when sigma(i) > sigma(i+1).
std::uint32_t descent_mask(const Permutation& sigma);
/// (sigma tau)(i) = sigma(tau(i)).
Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation inverse(const Permutation& sigma);
/// Position of sigma in the lexicographic listing of S_n.
std::size_t permutation_rank(const Permutation& sigma);
/// S_n in lexicographic order (cached). Throws DegreeTooLarge past permutation_cap().
const std::vector<Permutation>& all_permutations(int n);

/// Element of the group algebra Q[S_n].
class PermutationElement {
 public:
  explicit PermutationElement(int n) : n_(n) {}
  PermutationElement(int n, std::map<Permutation, Rational> terms);

  int degree() const { return n_; }
  const std::map<Permutation, Rational>& terms() const { return terms_; }
  Rational coeff(const Permutation& sigma) const;
  void add(const Permutation& sigma, const Rational& c);

  PermutationElement& operator+=(const PermutationElement& other);
  PermutationElement& operator*=(const Rational& s);
  friend PermutationElement operator+(PermutationElement a, const PermutationElement& b) { return a += b; }
  friend PermutationElement operator*(const Rational& s, PermutationElement a) { return a *= s; }
  /// Group-algebra product: sum a_s b_t (s t).
  friend PermutationElement operator*(const PermutationElement& a, const PermutationElement& b);
  friend bool operator==(const PermutationElement& a, const PermutationElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  int n_;
  std::map<Permutation, Rational> terms_;
};

/// Word in the letters x_1, x_2, ... (stored as letter indices).
using Word = std::vector<int>;

/// Rational combination of words.
class TensorElement {
 public:
  TensorElement() = default;
  TensorElement(const Word& w, const Rational& c = 1);  // NOLINT

  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Word& w, const Rational& c);
  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator-=(const TensorElement& other);
  TensorElement& operator*=(const Rational& s);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const Rational& s, TensorElement a) { return a *= s; }
  /// Concatenation product.
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::map<Word, Rational> terms_;
};

/// [a, b] = ab - ba.
TensorElement bracket(const TensorElement& a, const TensorElement& b);

/// Lie element test: primitivity for the unshuffling coproduct of T(X).
/// `t` must be homogeneous in word length.
bool is_lie_element(const TensorElement& t);

}  // namespace renorm
