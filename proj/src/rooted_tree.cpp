#include "renorm/rooted_tree.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "renorm/errors.hpp"

namespace renorm {

RootedTree::RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {
  std::sort(children_.begin(), children_.end());
  for (const auto& c : children_) degree_ += c.degree_;
}

RootedTree RootedTree::ladder(int n) {
  if (n < 1) throw InvalidArgument("ladder needs at least one vertex");
  RootedTree t;
  for (int i = 1; i < n; ++i) t = RootedTree(std::vector<RootedTree>{t});
  return t;
}

bool RootedTree::is_ladder() const {
  const RootedTree* t = this;
  while (!t->children_.empty()) {
    if (t->children_.size() != 1) return false;
    t = &t->children_.front();
  }
  return true;
}

std::string RootedTree::code() const {
  std::string s = "[";
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (i) s += ',';
    s += children_[i].code();
  }
  s += ']';
  return s;
}

std::strong_ordering operator<=>(const RootedTree& a, const RootedTree& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(), b.children_.begin(),
                                                b.children_.end());
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view s) : s_(s) {}

  RootedTree parse_all() {
    RootedTree t = parse_tree();
    skip_space();
    if (pos_ != s_.size()) fail("trailing characters");
    return t;
  }

 private:
  RootedTree parse_tree() {
    skip_space();
    expect('[');
    std::vector<RootedTree> children;
    skip_space();
    if (peek() != ']') {
      while (true) {
        children.push_back(parse_tree());
        skip_space();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    skip_space();
    expect(']');
    return RootedTree(std::move(children));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad tree code '" + std::string(s_) + "': " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// Multisets of trees with total size `remaining`, drawn from `pool` at index <= `max_index`.
void child_multisets(const std::vector<RootedTree>& pool, std::size_t max_index, int remaining,
                     std::vector<RootedTree>& current, std::vector<std::vector<RootedTree>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = 0; i <= max_index && i < pool.size(); ++i) {
    if (pool[i].degree() > remaining) continue;
    current.push_back(pool[i]);
    child_multisets(pool, i, remaining - pool[i].degree(), current, out);
    current.pop_back();
  }
}

}  // namespace

RootedTree RootedTree::parse(std::string_view code) { return TreeParser(code).parse_all(); }

std::vector<RootedTree> trees_of_degree(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<RootedTree>> cache;
  if (n < 1) return {};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<RootedTree> pool;
  for (int d = 1; d < n; ++d) {
    auto smaller = trees_of_degree(d);
    pool.insert(pool.end(), smaller.begin(), smaller.end());
  }
  std::vector<std::vector<RootedTree>> forests;
  std::vector<RootedTree> current;
  if (!pool.empty()) child_multisets(pool, pool.size() - 1, n - 1, current, forests);
  if (n == 1) forests.emplace_back();
  std::vector<RootedTree> result;
  result.reserve(forests.size());
  for (auto& f : forests) result.emplace_back(std::move(f));
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  std::lock_guard lock(mutex);
  cache.emplace(n, result);
  return result;
}

}  // namespace renorm
