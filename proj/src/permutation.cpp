#include "renorm/permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "renorm/errors.hpp"

namespace renorm {

int permutation_cap() {
  if (const char* env = std::getenv("RENORM_MAX_DEGREE")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 8;
}

std::uint32_t descent_mask(const Permutation& sigma) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
    if (sigma[i] > sigma[i + 1]) mask |= 1u << i;
  }
  return mask;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  Permutation r(tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i) r[i] = sigma[static_cast<std::size_t>(tau[i] - 1)];
  return r;
}

Permutation inverse(const Permutation& sigma) {
  Permutation r(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) r[static_cast<std::size_t>(sigma[i] - 1)] = static_cast<int>(i + 1);
  return r;
}

std::size_t permutation_rank(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sigma[j] < sigma[i]) ++smaller;
    }
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

const std::vector<Permutation>& all_permutations(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Permutation>> cache;
  if (n < 0) throw InvalidArgument("negative permutation degree");
  if (n > permutation_cap()) {
    throw DegreeTooLarge("S_" + std::to_string(n) + " exceeds the permutation cap " + std::to_string(permutation_cap()));
  }
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (slot.empty()) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
      slot.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return slot;
}

// ---------------------------------------------------------------- PermutationElement

PermutationElement::PermutationElement(int n, std::map<Permutation, Rational> terms) : n_(n) {
  for (auto& [p, c] : terms) {
    if (static_cast<int>(p.size()) != n) throw InvalidArgument("permutation of the wrong degree");
    add(p, c);
  }
}

Rational PermutationElement::coeff(const Permutation& sigma) const {
  auto it = terms_.find(sigma);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PermutationElement::add(const Permutation& sigma, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(sigma, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PermutationElement& PermutationElement::operator+=(const PermutationElement& other) {
  if (other.n_ != n_) throw InvalidArgument("adding permutation elements of different degrees");
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

PermutationElement& PermutationElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= s;
  return *this;
}

PermutationElement operator*(const PermutationElement& a, const PermutationElement& b) {
  if (a.n_ != b.n_) throw InvalidArgument("multiplying permutation elements of different degrees");
  PermutationElement r(a.n_);
  for (const auto& [s, cs] : a.terms_) {
    for (const auto& [t, ct] : b.terms_) r.add(compose(s, t), cs * ct);
  }
  return r;
}

std::string PermutationElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << renorm::to_string(c) << "*[";
    for (int v : p) os << v;
    os << ']';
  }
  return os.str();
}

// ---------------------------------------------------------------- TensorElement

TensorElement::TensorElement(const Word& w, const Rational& c) {
  if (c != 0) terms_.emplace(w, c);
}

void TensorElement::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  TensorElement r;
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add(w, cu * cv);
    }
  }
  return r;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << renorm::to_string(c) << '*';
    for (int x : w) os << 'x' << x;
  }
  return os.str();
}

TensorElement bracket(const TensorElement& a, const TensorElement& b) { return a * b - b * a; }

bool is_lie_element(const TensorElement& t) {
  if (t.is_zero()) return true;
  const std::size_t n = t.terms().begin()->first.size();
  for (const auto& [w, c] : t.terms()) {
    if (w.size() != n) throw NotHomogeneous("is_lie_element needs words of a single length");
  }
  if (n == 0) return false;
  const bool packable =
      n <= 11 && std::all_of(t.terms().begin(), t.terms().end(), [](const auto& kv) {
        return std::all_of(kv.first.begin(), kv.first.end(), [](int x) { return x >= 0 && x < 32; });
      });
  // Accumulates sum_w t_w Delta(w) restricted to the proper, nonempty splits.
  std::unordered_map<std::uint64_t, Rational> packed;
  std::map<std::pair<Word, Word>, Rational> general;
  for (const auto& [w, c] : t.terms()) {
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      if (packable) {
        std::uint64_t key = static_cast<std::uint64_t>(__builtin_popcount(mask));
        for (std::size_t i = 0; i < n; ++i) {
          if (mask & (1u << i)) key = (key << 5) | static_cast<std::uint64_t>(w[i]);
        }
        for (std::size_t i = 0; i < n; ++i) {
          if (!(mask & (1u << i))) key = (key << 5) | static_cast<std::uint64_t>(w[i]);
        }
        packed[key] += c;
      } else {
        Word left, right;
        for (std::size_t i = 0; i < n; ++i) ((mask & (1u << i)) ? left : right).push_back(w[i]);
        general[{left, right}] += c;
      }
    }
  }
  for (const auto& [k, c] : packed) {
    if (c != 0) return false;
  }
  for (const auto& [k, c] : general) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace renorm
