#pragma once

#include <map>
#include <optional>
#include <vector>

#include "renorm/hopf_basis.hpp"
#include "renorm/laurent.hpp"

namespace renorm {

/// A linear map H -> L, stored by its values on every basis forest of degree <= N.
/// All maps taking part in one computation share a basis; mixing bases throws
/// TruncationMismatch. Stored values are capped at eps^(N+1).
class LinMap {
 public:
  explicit LinMap(BasisPtr basis);
  LinMap(BasisPtr basis, std::vector<LaurentSeries> values);

  /// The convolution unit e = u o counit.
  static LinMap counit(BasisPtr basis);

  const BasisPtr& basis() const { return basis_; }
  int truncation() const { return basis_->max_degree(); }
  const std::vector<LaurentSeries>& values() const { return values_; }
  const LaurentSeries& value(BasisIndex i) const { return values_[i]; }
  /// Value on an arbitrary forest of the family; zero beyond the truncation.
  LaurentSeries value(const Forest& f) const;
  /// Linear extension to a combination of basis forests.
  LaurentSeries value(const SparseVec& x) const;

  LinMap operator-() const;
  LinMap& operator+=(const LinMap& other);
  LinMap& operator-=(const LinMap& other);
  LinMap& operator*=(const Rational& s);
  friend LinMap operator+(LinMap a, const LinMap& b) { return a += b; }
  friend LinMap operator-(LinMap a, const LinMap& b) { return a -= b; }
  friend LinMap operator*(LinMap a, const Rational& s) { return a *= s; }
  friend LinMap operator*(const Rational& s, LinMap a) { return a *= s; }

  /// Basis index of the first forest where the two maps differ.
  std::optional<BasisIndex> first_difference(const LinMap& other) const;
  friend bool operator==(const LinMap& a, const LinMap& b) { return !a.first_difference(b); }

 private:
  void require_same_basis(const LinMap& other) const;
  void clamp_caps();

  BasisPtr basis_;
  std::vector<LaurentSeries> values_;
};

/// f * g = m o (f (x) g) o Delta.
LinMap convolve(const LinMap& f, const LinMap& g);
/// f restricted to degree n, zero elsewhere.
LinMap graded_component(const LinMap& f, int n);
/// f restricted to degrees lo..hi inclusive.
LinMap degree_block(const LinMap& f, int lo, int hi);
/// R- / R+ applied to every value.
LinMap apply_r_minus(const LinMap& f);
LinMap apply_r_plus(const LinMap& f);

/// Convolution logarithm sum_k (-1)^(k-1)/k (f - e)^{*k}; requires f(1) = 1.
LinMap conv_log(const LinMap& f);
/// Convolution exponential sum_k rho^{*k}/k!; requires rho(1) = 0.
LinMap conv_exp(const LinMap& rho);

enum class Connectedness {
  Group,  ///< f - e vanishes in degrees 1..n-1
  Lie,    ///< f vanishes in degrees 0..n-1
};
bool is_n_connected(const LinMap& f, int n, Connectedness kind);

/// f(1) = 1 and f(a b) = f(a) f(b) for every pair with deg a + deg b <= N.
bool is_character(const LinMap& f);
/// f(1) = 0 and f vanishes on every forest with two or more trees.
bool is_inf_char(const LinMap& f);

/// A character of H with values in L. Determined by its values on trees.
class Character {
 public:
  /// Values on trees absent from the map are zero. Forest values are filled in by multiplicativity.
  static Character from_tree_values(BasisPtr basis, const std::map<RootedTree, LaurentSeries>& tree_values);
  /// Throws InvalidArgument when `f` is not a character.
  static Character from_linmap(LinMap f);
  /// Wraps a map the caller already knows to be multiplicative.
  static Character unchecked(LinMap f) { return Character(std::move(f)); }
  static Character identity(BasisPtr basis) { return Character(LinMap::counit(std::move(basis))); }

  const LinMap& map() const { return map_; }
  const BasisPtr& basis() const { return map_.basis(); }
  int truncation() const { return map_.truncation(); }
  const LaurentSeries& value(BasisIndex i) const { return map_.value(i); }
  LaurentSeries value(const Forest& f) const { return map_.value(f); }

  friend bool operator==(const Character& a, const Character& b) { return a.map_ == b.map_; }

 private:
  explicit Character(LinMap f) : map_(std::move(f)) {}
  LinMap map_;
};

/// An infinitesimal character: vanishes on the unit and on products of trees.
class InfChar {
 public:
  static InfChar from_tree_values(BasisPtr basis, const std::map<RootedTree, LaurentSeries>& tree_values);
  /// Throws InvalidArgument when `f` is not an infinitesimal character.
  static InfChar from_linmap(LinMap f);
  static InfChar unchecked(LinMap f) { return InfChar(std::move(f)); }
  static InfChar zero(BasisPtr basis) { return InfChar(LinMap(std::move(basis))); }

  const LinMap& map() const { return map_; }
  const BasisPtr& basis() const { return map_.basis(); }
  const LaurentSeries& value(BasisIndex i) const { return map_.value(i); }
  LaurentSeries value(const Forest& f) const { return map_.value(f); }
  bool is_zero() const;

  InfChar operator-() const { return InfChar(-map_); }
  friend InfChar operator+(const InfChar& a, const InfChar& b) { return InfChar(a.map_ + b.map_); }
  friend InfChar operator-(const InfChar& a, const InfChar& b) { return InfChar(a.map_ - b.map_); }
  friend InfChar operator*(const Rational& s, const InfChar& a) { return InfChar(s * a.map_); }
  friend bool operator==(const InfChar& a, const InfChar& b) { return a.map_ == b.map_; }

 private:
  explicit InfChar(LinMap f) : map_(std::move(f)) {}
  LinMap map_;
};

Character convolve(const Character& a, const Character& b);
/// phi^{-1} = phi o S.
Character conv_inverse(const Character& phi);
InfChar conv_log(const Character& phi);
Character conv_exp(const InfChar& rho);
InfChar graded_component(const InfChar& rho, int n);
InfChar apply_r_minus(const InfChar& rho);
InfChar apply_r_plus(const InfChar& rho);

/// Endomorphism of H truncated at degree N: column i is the image of basis forest i.
class HopfEndo {
 public:
  explicit HopfEndo(BasisPtr basis);
  HopfEndo(BasisPtr basis, std::vector<SparseVec> columns);

  static HopfEndo identity(BasisPtr basis);
  /// Projection onto the degree-n component H_n (p_0 is the convolution unit u o counit).
  static HopfEndo projection(BasisPtr basis, int n);

  const BasisPtr& basis() const { return basis_; }
  const SparseVec& column(BasisIndex i) const { return columns_[i]; }
  HopfElement apply(const HopfElement& x) const;

  HopfEndo& operator+=(const HopfEndo& other);
  HopfEndo& operator*=(const Rational& s);
  friend HopfEndo operator+(HopfEndo a, const HopfEndo& b) { return a += b; }
  friend HopfEndo operator*(const Rational& s, HopfEndo a) { return a *= s; }
  friend bool operator==(const HopfEndo& a, const HopfEndo& b);

 private:
  BasisPtr basis_;
  std::vector<SparseVec> columns_;
};

/// Convolution in End(H): m o (f (x) g) o Delta.
HopfEndo convolve(const HopfEndo& f, const HopfEndo& g);
/// Composition f o g.
HopfEndo compose(const HopfEndo& f, const HopfEndo& g);
/// phi o E.
LinMap compose(const LinMap& phi, const HopfEndo& e);

}  // namespace renorm
