#include "renorm/hopf_basis.hpp"

#include <algorithm>
#include <mutex>

#include "renorm/errors.hpp"

namespace renorm {

std::shared_ptr<const HopfBasis> HopfBasis::get(TreeFamily family, int max_degree) {
  static std::mutex mutex;
  static std::map<std::pair<TreeFamily, int>, std::shared_ptr<const HopfBasis>> cache;
  if (max_degree < 0) throw InvalidArgument("truncation degree must be nonnegative");
  if (max_degree > degree_cap(family)) {
    throw DegreeTooLarge("degree " + std::to_string(max_degree) + " exceeds the cap " +
                         std::to_string(degree_cap(family)) + " for " + to_string(family));
  }
  std::lock_guard lock(mutex);
  auto& slot = cache[{family, max_degree}];
  if (!slot) slot.reset(new HopfBasis(family, max_degree));
  return slot;
}

HopfBasis::HopfBasis(TreeFamily family, int max_degree) : family_(family), max_degree_(max_degree) {
  for (int n = 0; n <= max_degree; ++n) {
    degree_start_.push_back(static_cast<BasisIndex>(forests_.size()));
    for (auto& f : enumerate_basis(n, family)) forests_.push_back(std::move(f));
  }
  degree_start_.push_back(static_cast<BasisIndex>(forests_.size()));
  for (BasisIndex i = 0; i < forests_.size(); ++i) {
    index_.emplace(forests_[i], i);
    if (forests_[i].is_tree()) trees_.push_back(i);
  }
  factors_.resize(forests_.size());
  for (BasisIndex i = 0; i < forests_.size(); ++i) {
    for (const auto& t : forests_[i].trees()) factors_[i].push_back(index(Forest(t)));
  }
  const std::size_t n = forests_.size();
  product_.assign(n * n, -1);
  for (BasisIndex i = 0; i < n; ++i) {
    for (BasisIndex j = 0; j < n; ++j) {
      if (forests_[i].degree() + forests_[j].degree() > max_degree) continue;
      product_[i * n + j] = static_cast<std::int32_t>(index(forests_[i] * forests_[j]));
    }
  }
  coproduct_.resize(n);
  antipode_.resize(n);
  for (BasisIndex i = 0; i < n; ++i) {
    const HopfTensor delta = renorm::coproduct(forests_[i]);
    for (const auto& [k, c] : delta.terms()) {
      coproduct_[i].push_back({index(k.first), index(k.second), c});
    }
    antipode_[i] = from_element(renorm::antipode(forests_[i]));
  }
}

std::pair<BasisIndex, BasisIndex> HopfBasis::degree_range(int n) const {
  if (n < 0 || n > max_degree_) return {0, 0};
  return {degree_start_[static_cast<std::size_t>(n)], degree_start_[static_cast<std::size_t>(n) + 1]};
}

std::optional<BasisIndex> HopfBasis::find(const Forest& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BasisIndex HopfBasis::index(const Forest& f) const {
  auto i = find(f);
  if (!i) {
    throw InvalidArgument("forest '" + f.code() + "' is not in the " + to_string(family_) + " basis up to degree " +
                          std::to_string(max_degree_));
  }
  return *i;
}

std::optional<BasisIndex> HopfBasis::product(BasisIndex i, BasisIndex j) const {
  const auto p = product_[static_cast<std::size_t>(i) * forests_.size() + j];
  if (p < 0) return std::nullopt;
  return static_cast<BasisIndex>(p);
}

HopfElement HopfBasis::to_element(const SparseVec& v) const {
  HopfElement x;
  for (const auto& [i, c] : v) x.add(forests_[i], c);
  return x;
}

SparseVec HopfBasis::from_element(const HopfElement& x) const {
  SparseVec v;
  for (const auto& [f, c] : x.terms()) v.emplace_back(index(f), c);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

}  // namespace renorm
