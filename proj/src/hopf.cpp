#include "renorm/hopf.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>

#include "renorm/errors.hpp"

namespace renorm {

std::string to_string(TreeFamily family) {
  return family == TreeFamily::RootedTrees ? "rooted_trees" : "ladders";
}

TreeFamily parse_family(std::string_view name) {
  if (name == "rooted_trees" || name == "rooted-trees") return TreeFamily::RootedTrees;
  if (name == "ladders" || name == "ladders-only") return TreeFamily::Ladders;
  throw ParseError("unknown Hopf algebra family '" + std::string(name) + "'");
}

int degree_cap(TreeFamily family) {
  if (const char* env = std::getenv("RENORM_MAX_DEGREE")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return family == TreeFamily::RootedTrees ? 6 : 8;
}

// ---------------------------------------------------------------- Forest

Forest::Forest(std::vector<RootedTree> trees) : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end());
  for (const auto& t : trees_) degree_ += t.degree();
}

Forest Forest::parse(std::string_view code) {
  std::vector<RootedTree> trees;
  std::size_t start = code.find_first_not_of(" \t");
  if (start == std::string_view::npos || code.substr(start) == "1") return Forest{};
  // split on top-level commas
  int depth = 0;
  std::size_t begin = start;
  for (std::size_t i = start; i < code.size(); ++i) {
    const char c = code[i];
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (depth < 0) throw ParseError("unbalanced brackets in forest code '" + std::string(code) + "'");
    if (c == ',' && depth == 0) {
      trees.push_back(RootedTree::parse(code.substr(begin, i - begin)));
      begin = i + 1;
    }
  }
  trees.push_back(RootedTree::parse(code.substr(begin)));
  return Forest(std::move(trees));
}

std::string Forest::code() const {
  std::string s;
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (i) s += ',';
    s += trees_[i].code();
  }
  return s;
}

Forest operator*(const Forest& a, const Forest& b) {
  std::vector<RootedTree> merged;
  merged.reserve(a.trees_.size() + b.trees_.size());
  std::merge(a.trees_.begin(), a.trees_.end(), b.trees_.begin(), b.trees_.end(), std::back_inserter(merged));
  Forest f;
  f.trees_ = std::move(merged);
  f.degree_ = a.degree_ + b.degree_;
  return f;
}

std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  if (auto c = a.trees_.size() <=> b.trees_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.trees_.begin(), a.trees_.end(), b.trees_.begin(), b.trees_.end());
}

// ---------------------------------------------------------------- HopfElement

HopfElement::HopfElement(const Forest& f, const Rational& c) {
  if (c != 0) terms_.emplace(f, c);
}

Rational HopfElement::coeff(const Forest& f) const {
  auto it = terms_.find(f);
  return it == terms_.end() ? Rational(0) : it->second;
}

HopfElement HopfElement::component(int n) const {
  HopfElement r;
  for (const auto& [f, c] : terms_) {
    if (f.degree() == n) r.terms_.emplace(f, c);
  }
  return r;
}

int HopfElement::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

void HopfElement::add(const Forest& f, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HopfElement& HopfElement::operator+=(const HopfElement& other) {
  for (const auto& [f, c] : other.terms_) add(f, c);
  return *this;
}

HopfElement& HopfElement::operator-=(const HopfElement& other) {
  for (const auto& [f, c] : other.terms_) add(f, -c);
  return *this;
}

HopfElement& HopfElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [f, c] : terms_) c *= s;
  return *this;
}

HopfElement HopfElement::operator-() const {
  HopfElement r = *this;
  for (auto& [f, c] : r.terms_) c = -c;
  return r;
}

HopfElement operator*(const HopfElement& a, const HopfElement& b) {
  HopfElement r;
  for (const auto& [fa, ca] : a.terms_) {
    for (const auto& [fb, cb] : b.terms_) r.add(fa * fb, ca * cb);
  }
  return r;
}

std::string HopfElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [f, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << renorm::to_string(c) << "*{" << (f.is_unit() ? "1" : f.code()) << '}';
  }
  return os.str();
}

// ---------------------------------------------------------------- HopfTensor

void HopfTensor::add(const Forest& left, const Forest& right, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{left, right}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HopfTensor& HopfTensor::operator+=(const HopfTensor& other) {
  for (const auto& [k, c] : other.terms_) add(k.first, k.second, c);
  return *this;
}

HopfTensor operator*(const HopfTensor& a, const HopfTensor& b) {
  HopfTensor r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) r.add(ka.first * kb.first, ka.second * kb.second, ca * cb);
  }
  return r;
}

// ---------------------------------------------------------------- coproduct

namespace {

// Tree flattened into preorder vertex arrays.
struct FlatTree {
  std::vector<int> parent;
  std::vector<std::vector<int>> children;

  explicit FlatTree(const RootedTree& t) { add(t, -1); }

  int add(const RootedTree& t, int p) {
    const int v = static_cast<int>(parent.size());
    parent.push_back(p);
    children.emplace_back();
    for (const auto& c : t.children()) {
      const int cv = add(c, v);
      children[v].push_back(cv);
    }
    return v;
  }

  bool is_ancestor(int a, int v) const {
    for (int u = parent[v]; u >= 0; u = parent[u]) {
      if (u == a) return true;
    }
    return false;
  }

  // Subtree at v, skipping every vertex flagged in `removed` together with its descendants.
  RootedTree build(int v, const std::vector<bool>& removed) const {
    std::vector<RootedTree> kids;
    for (int c : children[v]) {
      if (!removed[c]) kids.push_back(build(c, removed));
    }
    return RootedTree(std::move(kids));
  }
};

std::mutex g_cut_mutex;
std::map<RootedTree, HopfTensor> g_cut_cache;
std::mutex g_antipode_mutex;
std::map<RootedTree, HopfElement> g_antipode_cache;

HopfTensor enumerate_cuts(const RootedTree& t) {
  const FlatTree flat(t);
  const int nv = static_cast<int>(flat.parent.size());
  const int ne = nv - 1;  // edge i joins vertex i+1 to its parent
  if (ne > 24) throw DegreeTooLarge("admissible-cut enumeration limited to 25 vertices");
  HopfTensor result;
  result.add(Forest(t), Forest{}, 1);
  const std::vector<bool> none(static_cast<std::size_t>(nv), false);
  for (unsigned long mask = 0; mask < (1ul << ne); ++mask) {
    std::vector<int> cut;
    for (int e = 0; e < ne; ++e) {
      if (mask & (1ul << e)) cut.push_back(e + 1);
    }
    bool admissible = true;
    for (std::size_t i = 0; i < cut.size() && admissible; ++i) {
      for (std::size_t j = 0; j < cut.size() && admissible; ++j) {
        if (i != j && flat.is_ancestor(cut[i], cut[j])) admissible = false;
      }
    }
    if (!admissible) continue;
    std::vector<bool> removed(static_cast<std::size_t>(nv), false);
    std::vector<RootedTree> pruned;
    for (int v : cut) {
      removed[static_cast<std::size_t>(v)] = true;
      pruned.push_back(flat.build(v, none));
    }
    result.add(Forest(std::move(pruned)), Forest(flat.build(0, removed)), 1);
  }
  return result;
}

}  // namespace

HopfTensor coproduct(const RootedTree& t) {
  {
    std::lock_guard lock(g_cut_mutex);
    if (auto it = g_cut_cache.find(t); it != g_cut_cache.end()) return it->second;
  }
  HopfTensor r = enumerate_cuts(t);
  std::lock_guard lock(g_cut_mutex);
  g_cut_cache.emplace(t, r);
  return r;
}

HopfTensor coproduct(const Forest& f) {
  HopfTensor r;
  r.add(Forest{}, Forest{}, 1);
  for (const auto& t : f.trees()) r = r * coproduct(t);
  return r;
}

HopfTensor coproduct(const HopfElement& x) {
  HopfTensor r;
  for (const auto& [f, c] : x.terms()) {
    const HopfTensor delta = coproduct(f);
    for (const auto& [k, d] : delta.terms()) r.add(k.first, k.second, c * d);
  }
  return r;
}

namespace {

HopfElement tree_antipode(const RootedTree& t) {
  {
    std::lock_guard lock(g_antipode_mutex);
    if (auto it = g_antipode_cache.find(t); it != g_antipode_cache.end()) return it->second;
  }
  HopfElement s = -HopfElement(Forest(t));
  const HopfTensor delta = coproduct(t);
  for (const auto& [k, c] : delta.terms()) {
    const auto& [left, right] = k;
    if (left.is_unit() || right.is_unit()) continue;
    s -= antipode(left) * HopfElement(right, c);
  }
  std::lock_guard lock(g_antipode_mutex);
  g_antipode_cache.emplace(t, s);
  return s;
}

}  // namespace

HopfElement antipode(const Forest& f) {
  HopfElement r = HopfElement::unit();
  for (const auto& t : f.trees()) r = r * tree_antipode(t);
  return r;
}

HopfElement antipode(const HopfElement& x) {
  HopfElement r;
  for (const auto& [f, c] : x.terms()) r += antipode(f) * c;
  return r;
}

std::map<std::pair<std::pair<Forest, Forest>, Forest>, Rational> coassoc_left(const HopfTensor& t) {
  std::map<std::pair<std::pair<Forest, Forest>, Forest>, Rational> r;
  for (const auto& [k, c] : t.terms()) {
    const HopfTensor delta_left = coproduct(k.first);
    for (const auto& [k2, d] : delta_left.terms()) r[{{k2.first, k2.second}, k.second}] += c * d;
  }
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

std::map<std::pair<std::pair<Forest, Forest>, Forest>, Rational> coassoc_right(const HopfTensor& t) {
  std::map<std::pair<std::pair<Forest, Forest>, Forest>, Rational> r;
  for (const auto& [k, c] : t.terms()) {
    const HopfTensor delta_right = coproduct(k.second);
    for (const auto& [k2, d] : delta_right.terms()) r[{{k.first, k2.first}, k2.second}] += c * d;
  }
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

HopfElement antipode_left_convolution(const HopfTensor& t) {
  HopfElement r;
  for (const auto& [k, c] : t.terms()) r += antipode(k.first) * HopfElement(k.second, c);
  return r;
}

HopfElement antipode_right_convolution(const HopfTensor& t) {
  HopfElement r;
  for (const auto& [k, c] : t.terms()) r += HopfElement(k.first, c) * antipode(k.second);
  return r;
}

// ---------------------------------------------------------------- basis

std::vector<Forest> enumerate_basis(int n, TreeFamily family) {
  if (n < 0) throw InvalidArgument("basis degree must be nonnegative");
  std::vector<RootedTree> pool;
  for (int d = 1; d <= n; ++d) {
    if (family == TreeFamily::Ladders) {
      pool.push_back(RootedTree::ladder(d));
    } else {
      auto ts = trees_of_degree(d);
      pool.insert(pool.end(), ts.begin(), ts.end());
    }
  }
  std::vector<Forest> out;
  std::vector<RootedTree> current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t max_index, int remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (std::size_t i = 0; i <= max_index && i < pool.size(); ++i) {
      if (pool[i].degree() > remaining) continue;
      current.push_back(pool[i]);
      rec(i, remaining - pool[i].degree());
      current.pop_back();
    }
  };
  if (n == 0) {
    out.emplace_back();
  } else {
    rec(pool.size() - 1, n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace renorm
