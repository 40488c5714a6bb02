#include "renorm/descent.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "renorm/errors.hpp"

namespace renorm {

std::string to_string(ExpMode mode) { return mode == ExpMode::Plain ? "plain" : "accelerated"; }
std::string to_string(Side side) { return side == Side::Left ? "left" : "right"; }

// ---------------------------------------------------------------- Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw InvalidArgument("composition parts must be positive");
    weight_ += p;
  }
}

Composition Composition::parse(std::string_view code) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < code.size()) {
    std::size_t end = code.find(',', pos);
    if (end == std::string_view::npos) end = code.size();
    std::string token(code.substr(pos, end - pos));
    token.erase(std::remove_if(token.begin(), token.end(), [](char c) { return c == ' ' || c == '(' || c == ')'; }),
                token.end());
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("bad composition code '" + std::string(code) + "'");
    }
    parts.push_back(std::stoi(token));
    pos = end + 1;
  }
  try {
    return Composition(std::move(parts));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string Composition::code() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::uint32_t Composition::partial_sum_mask() const {
  std::uint32_t mask = 0;
  int sum = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    sum += parts_[i];
    mask |= 1u << (sum - 1);
  }
  return mask;
}

Composition Composition::from_mask(std::uint32_t mask, int weight) {
  std::vector<int> parts;
  int last = 0;
  for (int i = 1; i < weight; ++i) {
    if (mask & (1u << (i - 1))) {
      parts.push_back(i - last);
      last = i;
    }
  }
  if (weight > 0) parts.push_back(weight - last);
  return Composition(std::move(parts));
}

Composition operator+(const Composition& a, const Composition& b) {
  Composition r = a;
  r.parts_.insert(r.parts_.end(), b.parts_.begin(), b.parts_.end());
  r.weight_ += b.weight_;
  return r;
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  if (auto c = a.parts_.size() <=> b.parts_.size(); c != 0) return c;
  return a.parts_ <=> b.parts_;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) out.push_back(Composition::from_mask(mask, n));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- DescentElement

DescentElement::DescentElement(const Composition& c, const Rational& coeff) {
  if (coeff != 0) terms_.emplace(c, coeff);
}

DescentElement DescentElement::projection(int n) {
  if (n == 0) return unit();
  return DescentElement(Composition({n}));
}

Rational DescentElement::coeff(const Composition& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? Rational(0) : it->second;
}

DescentElement DescentElement::component(int weight) const {
  DescentElement r;
  for (const auto& [c, x] : terms_) {
    if (c.weight() == weight) r.terms_.emplace(c, x);
  }
  return r;
}

DescentElement DescentElement::truncated(int max_weight) const {
  DescentElement r;
  for (const auto& [c, x] : terms_) {
    if (c.weight() > max_weight) break;
    r.terms_.emplace(c, x);
  }
  return r;
}

int DescentElement::homogeneous_weight() const {
  if (terms_.empty()) throw NotHomogeneous("zero element has no weight");
  const int w = terms_.begin()->first.weight();
  if (terms_.rbegin()->first.weight() != w) throw NotHomogeneous("descent element is not homogeneous");
  return w;
}

void DescentElement::add(const Composition& c, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(c, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

DescentElement& DescentElement::operator+=(const DescentElement& other) {
  for (const auto& [c, x] : other.terms_) add(c, x);
  return *this;
}

DescentElement& DescentElement::operator-=(const DescentElement& other) {
  for (const auto& [c, x] : other.terms_) add(c, -x);
  return *this;
}

DescentElement& DescentElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [c, x] : terms_) x *= s;
  return *this;
}

DescentElement DescentElement::operator-() const {
  DescentElement r = *this;
  for (auto& [c, x] : r.terms_) x = -x;
  return r;
}

DescentElement operator*(const DescentElement& a, const DescentElement& b) {
  DescentElement r;
  for (const auto& [ca, xa] : a.terms_) {
    for (const auto& [cb, xb] : b.terms_) r.add(ca + cb, xa * xb);
  }
  return r;
}

DescentElement d_convolve(const DescentElement& a, const DescentElement& b, int max_weight) {
  DescentElement r;
  for (const auto& [ca, xa] : a.terms()) {
    if (ca.weight() > max_weight) break;
    for (const auto& [cb, xb] : b.terms()) {
      if (ca.weight() + cb.weight() > max_weight) break;
      r.add(ca + cb, xa * xb);
    }
  }
  return r;
}

std::string DescentElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, x] : terms_) {
    const bool negative = x < 0;
    if (first) {
      if (negative) os << "−";
    } else {
      os << (negative ? " − " : " + ");
    }
    first = false;
    os << renorm::to_string(Rational(abs(x))) << "·(" << c.code() << ')';
  }
  return os.str();
}

// ---------------------------------------------------------------- Hopf structure

DescentTensor d_coproduct(const DescentElement& a) {
  DescentTensor out;
  for (const auto& [c, x] : a.terms()) {
    std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> acc;
    acc[{{}, {}}] = x;
    for (int part : c.parts()) {
      std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> next;
      for (const auto& [k, v] : acc) {
        for (int i = 0; i <= part; ++i) {
          auto left = k.first;
          auto right = k.second;
          if (i > 0) left.push_back(i);
          if (part - i > 0) right.push_back(part - i);
          next[{std::move(left), std::move(right)}] += v;
        }
      }
      acc = std::move(next);
    }
    for (auto& [k, v] : acc) out[{Composition(k.first), Composition(k.second)}] += v;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool is_primitive(const DescentElement& a) {
  DescentTensor expected;
  for (const auto& [c, x] : a.terms()) {
    expected[{c, Composition{}}] += x;
    expected[{Composition{}, c}] += x;
  }
  std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
  return d_coproduct(a) == expected;
}

DescentElement d_log(const DescentElement& a, int max_weight) {
  if (a.coeff(Composition{}) != 1 || a.component(0) != DescentElement::unit()) {
    throw InvalidArgument("d_log needs unit weight-0 part");
  }
  const DescentElement g = a.truncated(max_weight) - DescentElement::unit();
  DescentElement result = g;
  DescentElement power = g;
  for (int k = 2; k <= max_weight; ++k) {
    power = d_convolve(power, g, max_weight);
    if (power.is_zero()) break;
    result += power * Rational((k % 2 == 0) ? -1 : 1, k);
  }
  return result;
}

DescentElement d_exp(const DescentElement& a, int max_weight) {
  if (a.coeff(Composition{}) != 0) throw InvalidArgument("d_exp needs vanishing weight-0 part");
  const DescentElement g = a.truncated(max_weight);
  DescentElement result = DescentElement::unit() + g;
  DescentElement power = g;
  for (int k = 2; k <= max_weight; ++k) {
    power = d_convolve(power, g, max_weight) * Rational(1, k);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

DescentElement identity_series(int max_weight) {
  DescentElement id = DescentElement::unit();
  for (int n = 1; n <= max_weight; ++n) id += DescentElement::projection(n);
  return id;
}

DescentElement antipode_series(int max_weight) {
  const DescentElement g = identity_series(max_weight) - DescentElement::unit();
  DescentElement result = DescentElement::unit();
  DescentElement power = DescentElement::unit();
  for (int k = 1; k <= max_weight; ++k) {
    power = d_convolve(power, g, max_weight);
    result += power * Rational(k % 2 == 0 ? 1 : -1);
  }
  return result;
}

// ---------------------------------------------------------------- Zassenhaus / Dynkin

std::vector<DescentElement> zassenhaus(int max_weight, Side side, ExpMode mode) {
  if (max_weight < 1) throw InvalidArgument("Zassenhaus series need weight >= 1");
  std::vector<DescentElement> z(static_cast<std::size_t>(max_weight));
  // Remainder with the factors found so far stripped off Id.
  DescentElement remainder = identity_series(max_weight);
  auto strip = [&](const DescentElement& block) {
    const DescentElement factor = d_exp(-block, max_weight);
    remainder = side == Side::Left ? d_convolve(factor, remainder, max_weight) : d_convolve(remainder, factor, max_weight);
  };
  if (mode == ExpMode::Plain) {
    for (int n = 1; n <= max_weight; ++n) {
      z[static_cast<std::size_t>(n - 1)] = d_log(remainder, n).component(n);
      strip(z[static_cast<std::size_t>(n - 1)]);
    }
  } else {
    for (int m = 1;; ++m) {
      const auto [lo, hi] = accelerated_block(m, max_weight);
      if (lo > max_weight) break;
      const DescentElement log = d_log(remainder, hi);
      DescentElement block;
      for (int n = lo; n <= hi; ++n) {
        z[static_cast<std::size_t>(n - 1)] = log.component(n);
        block += z[static_cast<std::size_t>(n - 1)];
      }
      strip(block);
    }
  }
  return z;
}

std::vector<DescentElement> dynkin(int max_weight) {
  const DescentElement s = antipode_series(max_weight);
  std::vector<DescentElement> d;
  for (int n = 1; n <= max_weight; ++n) {
    DescentElement dn;
    for (int j = 1; j <= n; ++j) dn += s.component(n - j) * (DescentElement::projection(j) * Rational(j));
    d.push_back(std::move(dn));
  }
  return d;
}

// ---------------------------------------------------------------- permutation realization

namespace {

void check_weight(const DescentElement& a, int n) {
  for (const auto& [c, x] : a.terms()) {
    if (c.weight() != n) throw NotHomogeneous("element is not homogeneous of weight " + std::to_string(n));
  }
}

// x[D] = sum of the coefficients of the compositions whose partial-sum set contains D.
std::vector<Rational> descent_class_values(const DescentElement& a, int n) {
  const std::size_t size = n > 0 ? (std::size_t{1} << (n - 1)) : 1;
  std::vector<Rational> x(size);
  for (const auto& [c, v] : a.terms()) x[c.partial_sum_mask()] += v;
  for (std::size_t bit = 1; bit < size; bit <<= 1) {
    for (std::size_t mask = 0; mask < size; ++mask) {
      if (!(mask & bit)) x[mask] += x[mask | bit];
    }
  }
  return x;
}

// Inverse of descent_class_values.
DescentElement from_class_values(std::vector<Rational> y, int n) {
  const std::size_t size = y.size();
  for (std::size_t bit = 1; bit < size; bit <<= 1) {
    for (std::size_t mask = 0; mask < size; ++mask) {
      if (!(mask & bit)) y[mask] -= y[mask | bit];
    }
  }
  DescentElement r;
  for (std::size_t mask = 0; mask < size; ++mask) {
    r.add(Composition::from_mask(static_cast<std::uint32_t>(mask), n), y[mask]);
  }
  return r;
}

void check_cap(int n) {
  if (n > permutation_cap()) {
    throw DegreeTooLarge("weight " + std::to_string(n) + " exceeds the permutation cap " +
                         std::to_string(permutation_cap()));
  }
}

}  // namespace

PermutationElement to_permutations(const DescentElement& a, int n) {
  check_cap(n);
  check_weight(a, n);
  const std::vector<Rational> x = descent_class_values(a, n);
  PermutationElement p(n);
  for (const auto& sigma : all_permutations(n)) p.add(sigma, x[descent_mask(sigma)]);
  return p;
}

DescentElement from_permutations(const PermutationElement& p) {
  const int n = p.degree();
  check_cap(n);
  const std::size_t size = n > 0 ? (std::size_t{1} << (n - 1)) : 1;
  std::vector<Rational> y(size);
  std::vector<bool> seen(size, false);
  for (const auto& sigma : all_permutations(n)) {
    const auto d = descent_mask(sigma);
    const Rational c = p.coeff(sigma);
    if (!seen[d]) {
      y[d] = c;
      seen[d] = true;
    } else if (y[d] != c) {
      throw InvalidArgument("permutation element is not in the descent algebra");
    }
  }
  return from_class_values(std::move(y), n);
}

DescentElement internal_product(const DescentElement& a, const DescentElement& b) {
  if (a.is_zero() || b.is_zero()) return DescentElement();
  const int n = a.homogeneous_weight();
  if (b.homogeneous_weight() != n) throw NotHomogeneous("internal product needs equal weights");
  check_cap(n);
  const auto& perms = all_permutations(n);
  const std::vector<Rational> xa = descent_class_values(a, n);
  const std::vector<Rational> xb = descent_class_values(b, n);
  const std::size_t size = xa.size();
  // One representative per descent class; the product is constant on classes.
  std::vector<const Permutation*> rep(size, nullptr);
  for (const auto& sigma : perms) {
    auto& r = rep[descent_mask(sigma)];
    if (!r) r = &sigma;
  }
  std::vector<Rational> y(size);
  Rational t;
  for (const auto& sigma : perms) {
    const Rational& ca = xa[descent_mask(sigma)];
    if (ca == 0) continue;
    const Permutation sigma_inv = inverse(sigma);
    for (std::size_t d = 0; d < size; ++d) {
      // coefficient of rho in a b is sum_sigma a(sigma) b(sigma^-1 rho)
      const Permutation tau = compose(sigma_inv, *rep[d]);
      const Rational& cb = xb[descent_mask(tau)];
      if (cb == 0) continue;
      t = ca * cb;
      y[d] += t;
    }
  }
  return from_class_values(std::move(y), n);
}

TensorElement act_on_word(const PermutationElement& p, const Word& w) {
  if (static_cast<int>(w.size()) != p.degree()) throw InvalidArgument("word length differs from the weight");
  TensorElement r;
  Word image(w.size());
  for (const auto& [sigma, c] : p.terms()) {
    for (std::size_t i = 0; i < w.size(); ++i) image[i] = w[static_cast<std::size_t>(sigma[i] - 1)];
    r.add(image, c);
  }
  return r;
}

TensorElement act_on_word(const DescentElement& a, const Word& w) {
  return act_on_word(to_permutations(a, static_cast<int>(w.size())), w);
}

// ---------------------------------------------------------------- alpha_H

namespace {

// Images of the basis words, shared across calls (bases are never freed).
const HopfEndo& alpha_word(const Composition& c, const BasisPtr& basis) {
  static std::mutex mutex;
  static std::map<std::pair<const HopfBasis*, Composition>, HopfEndo> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({basis.get(), c}); it != cache.end()) return it->second;
  }
  HopfEndo e(basis);
  if (c.length() <= 1) {
    e = HopfEndo::projection(basis, c.weight());
  } else {
    const Composition head({c.parts().front()});
    const Composition tail(std::vector<int>(c.parts().begin() + 1, c.parts().end()));
    e = convolve(alpha_word(head, basis), alpha_word(tail, basis));
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace({basis.get(), c}, std::move(e)).first->second;
}

}  // namespace

HopfEndo alpha_H(const DescentElement& a, const BasisPtr& basis) {
  HopfEndo result(basis);
  for (const auto& [c, x] : a.terms()) {
    if (c.weight() > basis->max_degree()) continue;
    result += x * alpha_word(c, basis);
  }
  return result;
}

// ---------------------------------------------------------------- change of basis

DescentElement word_product(const std::vector<DescentElement>& generators, const Composition& word) {
  DescentElement r = DescentElement::unit();
  for (int part : word.parts()) {
    if (part < 1 || part > static_cast<int>(generators.size())) {
      throw InvalidArgument("no generator of weight " + std::to_string(part));
    }
    r = r * generators[static_cast<std::size_t>(part - 1)];
  }
  return r;
}

std::map<Composition, Rational> expand_in_words(const DescentElement& target,
                                                const std::vector<DescentElement>& generators) {
  std::map<Composition, Rational> coeffs;
  if (target.is_zero()) return coeffs;
  const int n = target.homogeneous_weight();
  DescentElement residual = target;
  for (const auto& c : compositions_of(n)) {
    const Rational r = residual.coeff(c);
    if (r == 0) continue;
    const DescentElement w = word_product(generators, c);
    const Rational lead = w.coeff(c);
    if (lead == 0) throw InvalidArgument("generator words are not triangular at " + c.code());
    const Rational k = r / lead;
    coeffs.emplace(c, k);
    residual -= w * k;
  }
  if (!residual.is_zero()) throw InvalidArgument("target is not spanned by the generator words");
  return coeffs;
}

bool words_unitriangular(const std::vector<DescentElement>& generators, int n) {
  for (const auto& row : compositions_of(n)) {
    const DescentElement w = word_product(generators, row);
    if (w.coeff(row) != 1) return false;
    for (const auto& [c, x] : w.terms()) {
      if (c < row) return false;
    }
  }
  return true;
}

ChangeOfBasis change_of_basis(int max_weight) {
  ChangeOfBasis out;
  out.max_weight = max_weight;
  const auto right = zassenhaus(max_weight, Side::Right, ExpMode::Plain);
  const auto left = zassenhaus(max_weight, Side::Left, ExpMode::Plain);
  const auto d = dynkin(max_weight);
  for (int n = 1; n <= max_weight; ++n) {
    out.dynkin_in_right_zassenhaus.push_back(expand_in_words(d[static_cast<std::size_t>(n - 1)], right));
    out.left_zassenhaus_in_dynkin.push_back(expand_in_words(left[static_cast<std::size_t>(n - 1)], d));
  }
  return out;
}

}  // namespace renorm
