#include "renorm/laurent.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "renorm/errors.hpp"

namespace renorm {

namespace {

std::atomic<int> g_pole_bound{64};

int saturate(long long cap) {
  return cap >= LaurentSeries::kExact ? LaurentSeries::kExact : static_cast<int>(cap);
}

// Cap of a product contributed by the unknown tail of `a` meeting the lowest term of `b`.
int tail_cap(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.is_exact()) return LaurentSeries::kExact;
  const int vb = b.valuation();
  if (vb >= LaurentSeries::kExact) return LaurentSeries::kExact;
  return saturate(static_cast<long long>(a.cap()) + vb);
}

}  // namespace

int pole_bound() { return g_pole_bound.load(std::memory_order_relaxed); }

void set_pole_bound(int bound) {
  if (bound < 0) throw InvalidArgument("pole bound must be nonnegative");
  g_pole_bound.store(bound, std::memory_order_relaxed);
}

ScopedPoleBound::ScopedPoleBound(int bound) : previous_(pole_bound()) { set_pole_bound(bound); }
ScopedPoleBound::~ScopedPoleBound() { set_pole_bound(previous_); }

LaurentSeries::LaurentSeries(const Rational& constant, int cap) : cap_(saturate(cap)) {
  if (constant != 0) coeffs_.emplace(0, constant);
  floor_ = std::min(0, cap_);
  normalize();
}

LaurentSeries::LaurentSeries(std::map<int, Rational> coeffs, int cap) : coeffs_(std::move(coeffs)), cap_(saturate(cap)) {
  floor_ = 0;
  for (const auto& [k, c] : coeffs_) {
    if (c != 0) {
      floor_ = std::min(floor_, k);
      break;
    }
  }
  floor_ = std::min(floor_, cap_);
  normalize();
}

LaurentSeries::LaurentSeries(std::map<int, Rational> coeffs, int floor, int cap)
    : coeffs_(std::move(coeffs)), floor_(floor), cap_(saturate(cap)) {
  if (floor_ > cap_) throw InvalidArgument("series floor exceeds its cap");
  normalize();
  if (!coeffs_.empty() && coeffs_.begin()->first < floor_) {
    throw InvalidArgument("series coefficient below its floor");
  }
}

LaurentSeries LaurentSeries::monomial(const Rational& c, int exponent, int cap) {
  std::map<int, Rational> m;
  m.emplace(exponent, c);
  return LaurentSeries(std::move(m), cap);
}

void LaurentSeries::normalize() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0 || it->first >= cap_) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
}

Rational LaurentSeries::coeff(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

int LaurentSeries::valuation() const { return coeffs_.empty() ? cap_ : coeffs_.begin()->first; }

int LaurentSeries::pole_order() const { return std::max(0, -valuation()); }

bool LaurentSeries::is_polar() const { return coeffs_.empty() || coeffs_.rbegin()->first < 0; }

bool LaurentSeries::is_holomorphic() const { return coeffs_.empty() || coeffs_.begin()->first >= 0; }

LaurentSeries LaurentSeries::truncated(int cap) const {
  LaurentSeries r = *this;
  r.cap_ = std::min(cap_, saturate(cap));
  r.floor_ = std::min(r.floor_, r.cap_);
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& [k, c] : r.coeffs_) c = -c;
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& other) {
  cap_ = std::min(cap_, other.cap_);
  floor_ = std::min({floor_, other.floor_, cap_});
  for (const auto& [k, c] : other.coeffs_) {
    if (k >= cap_) break;
    coeffs_[k] += c;
  }
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& other) {
  cap_ = std::min(cap_, other.cap_);
  floor_ = std::min({floor_, other.floor_, cap_});
  for (const auto& [k, c] : other.coeffs_) {
    if (k >= cap_) break;
    coeffs_[k] -= c;
  }
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, c] : coeffs_) c *= scalar;
  return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries r;
  r.cap_ = std::min(tail_cap(a, b), tail_cap(b, a));
  Rational t;
  for (const auto& [i, ci] : a.coeffs_) {
    if (!b.coeffs_.empty() && i + b.coeffs_.begin()->first >= r.cap_) break;
    for (const auto& [j, cj] : b.coeffs_) {
      if (i + j >= r.cap_) break;
      t = ci * cj;
      r.coeffs_[i + j] += t;
    }
  }
  r.normalize();
  const int bound = pole_bound();
  if (!r.coeffs_.empty() && r.coeffs_.begin()->first < -bound) {
    throw FloorExceeded("product has a pole of order " + std::to_string(-r.coeffs_.begin()->first) +
                        ", exceeding the pole bound " + std::to_string(bound));
  }
  const long long floor = static_cast<long long>(a.floor_) + b.floor_;
  r.floor_ = static_cast<int>(std::max<long long>(floor, -bound));
  r.floor_ = std::min({r.floor_, r.cap_, r.valuation()});
  return r;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.cap_ <= b.floor_ || b.cap_ <= a.floor_) {
    throw IncomparableWindows("comparing series with disjoint windows: " + a.to_string() + " vs " + b.to_string());
  }
  const int cap = std::min(a.cap_, b.cap_);
  auto ia = a.coeffs_.begin();
  auto ib = b.coeffs_.begin();
  while (true) {
    while (ia != a.coeffs_.end() && ia->first >= cap) ia = a.coeffs_.end();
    while (ib != b.coeffs_.end() && ib->first >= cap) ib = b.coeffs_.end();
    if (ia == a.coeffs_.end() || ib == b.coeffs_.end()) return ia == a.coeffs_.end() && ib == b.coeffs_.end();
    if (ia->first != ib->first || ia->second != ib->second) return false;
    ++ia;
    ++ib;
  }
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    Rational mag = abs(c);
    if (k == 0) {
      os << renorm::to_string(mag);
      continue;
    }
    if (mag != 1) os << renorm::to_string(mag) << '*';
    os << "eps";
    if (k != 1) os << '^' << k;
  }
  if (!is_exact()) {
    if (!first) os << " + ";
    os << "O(eps^" << cap_ << ')';
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

LaurentSeries r_minus(const LaurentSeries& a) {
  std::map<int, Rational> polar;
  for (const auto& [k, c] : a.terms()) {
    if (k >= 0) break;
    polar.emplace(k, c);
  }
  const int cap = a.cap() >= 0 ? LaurentSeries::kExact : a.cap();
  return LaurentSeries(std::move(polar), std::min(a.floor(), cap), cap);
}

LaurentSeries r_plus(const LaurentSeries& a) {
  std::map<int, Rational> regular(a.terms().lower_bound(0), a.terms().end());
  return LaurentSeries(std::move(regular), a.floor(), a.cap());
}

bool rb_check(const LaurentSeries& x, const LaurentSeries& y) {
  const LaurentSeries rx = r_minus(x);
  const LaurentSeries ry = r_minus(y);
  const LaurentSeries lhs = rx * ry;
  const LaurentSeries rhs = r_minus(x * ry) + r_minus(rx * y) - r_minus(x * y);
  return lhs == rhs;
}

}  // namespace renorm
