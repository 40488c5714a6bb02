#pragma once

#include <map>
#include <string>

#include "renorm/rational.hpp"

namespace renorm {

/// Deepest pole any product may produce before FloorExceeded is raised.
/// Process-wide; a computation session normally sets it to its truncation degree.
int pole_bound();
void set_pole_bound(int bound);

/// Installs a pole bound for the lifetime of the object and restores the previous one.
class ScopedPoleBound {
 public:
  explicit ScopedPoleBound(int bound);
  ~ScopedPoleBound();
  ScopedPoleBound(const ScopedPoleBound&) = delete;
  ScopedPoleBound& operator=(const ScopedPoleBound&) = delete;

 private:
  int previous_;
};

/// Truncated Laurent series in eps over Q:
///
///     sum_{k < cap} a_k eps^k + O(eps^cap)
///
/// Only nonzero coefficients are stored. `floor` is the lowest exponent the
/// value is allowed to carry; everything below it is zero. A cap of kExact
/// marks a series with no truncation (a Laurent polynomial).
///
/// Every operation tracks the cap pessimistically, so any coefficient below
/// the cap is exact.
class LaurentSeries {
 public:
  static constexpr int kExact = 1 << 28;

  /// Exact zero.
  LaurentSeries() = default;
  /// Constant series.
  explicit LaurentSeries(const Rational& constant, int cap = kExact);
  /// Coefficients at or above `cap` are dropped, zeros are discarded.
  explicit LaurentSeries(std::map<int, Rational> coeffs, int cap = kExact);
  LaurentSeries(std::map<int, Rational> coeffs, int floor, int cap);

  static LaurentSeries monomial(const Rational& c, int exponent, int cap = kExact);

  int floor() const { return floor_; }
  int cap() const { return cap_; }
  bool is_exact() const { return cap_ >= kExact; }
  const std::map<int, Rational>& terms() const { return coeffs_; }

  /// Coefficient of eps^k; zero outside the stored terms.
  Rational coeff(int k) const;

  /// Lowest exponent with a nonzero coefficient, or cap for a series with no known terms.
  int valuation() const;
  /// Order of the pole (0 when there is none).
  int pole_order() const;

  bool is_zero() const { return coeffs_.empty(); }
  /// Only negative exponents carry coefficients (the image of R-).
  bool is_polar() const;
  /// No negative exponents (the image of R+).
  bool is_holomorphic() const;

  /// Same value with the cap lowered to `cap` (never raised).
  LaurentSeries truncated(int cap) const;

  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& other);
  LaurentSeries& operator-=(const LaurentSeries& other);
  LaurentSeries& operator*=(const Rational& scalar);

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(LaurentSeries a, const Rational& s) { return a *= s; }
  friend LaurentSeries operator*(const Rational& s, LaurentSeries a) { return a *= s; }

  /// Compares coefficients below min(cap) after zero padding.
  /// Throws IncomparableWindows when [floor, cap) windows are disjoint.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  std::string to_string() const;

 private:
  void normalize();

  std::map<int, Rational> coeffs_;
  int floor_ = 0;
  int cap_ = kExact;
};

/// Strict polar part (minimal subtraction). Exact whenever the input cap is nonnegative.
LaurentSeries r_minus(const LaurentSeries& a);
/// a - R-(a): the part in Q[[eps]].
LaurentSeries r_plus(const LaurentSeries& a);

/// Weight-one Rota-Baxter identity
///   R-(x)R-(y) = R-(x R-(y)) + R-(R-(x) y) - R-(xy)
/// evaluated on the common window of both sides.
bool rb_check(const LaurentSeries& x, const LaurentSeries& y);

}  // namespace renorm
