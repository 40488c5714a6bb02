#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "renorm/hopf.hpp"

namespace renorm {

/// Index into a HopfBasis.
using BasisIndex = std::uint32_t;
/// Sparse rational vector over a HopfBasis, sorted by index.
using SparseVec = std::vector<std::pair<BasisIndex, Rational>>;

/// The forests of a family up to degree N, numbered in Forest order, with the
/// structure maps precomputed as index tables. Shared and immutable; obtain
/// instances through get(), which memoizes per (family, N).
class HopfBasis {
 public:
  struct CoproductTerm {
    BasisIndex left;
    BasisIndex right;
    Rational coeff;
  };

  static std::shared_ptr<const HopfBasis> get(TreeFamily family, int max_degree);

  TreeFamily family() const { return family_; }
  int max_degree() const { return max_degree_; }
  std::size_t size() const { return forests_.size(); }

  const Forest& forest(BasisIndex i) const { return forests_[i]; }
  int degree(BasisIndex i) const { return forests_[i].degree(); }
  /// Indices [first, last) of the forests of degree n.
  std::pair<BasisIndex, BasisIndex> degree_range(int n) const;

  std::optional<BasisIndex> find(const Forest& f) const;
  /// Throws InvalidArgument if f is not in the basis.
  BasisIndex index(const Forest& f) const;

  static constexpr BasisIndex unit_index() { return 0; }
  const std::vector<BasisIndex>& tree_indices() const { return trees_; }
  /// Tree factors of forest i as basis indices (with multiplicity).
  const std::vector<BasisIndex>& factors(BasisIndex i) const { return factors_[i]; }

  /// Coproduct of forest i; every term has left/right inside the basis.
  const std::vector<CoproductTerm>& coproduct(BasisIndex i) const { return coproduct_[i]; }
  const SparseVec& antipode(BasisIndex i) const { return antipode_[i]; }
  /// Index of forest(i) * forest(j), or nullopt when its degree exceeds N.
  std::optional<BasisIndex> product(BasisIndex i, BasisIndex j) const;

  HopfElement to_element(const SparseVec& v) const;
  /// Throws InvalidArgument for forests outside the basis.
  SparseVec from_element(const HopfElement& x) const;

  bool same_as(const HopfBasis& other) const {
    return family_ == other.family_ && max_degree_ == other.max_degree_;
  }

 private:
  HopfBasis(TreeFamily family, int max_degree);

  TreeFamily family_;
  int max_degree_;
  std::vector<Forest> forests_;
  std::map<Forest, BasisIndex> index_;
  std::vector<BasisIndex> degree_start_;
  std::vector<BasisIndex> trees_;
  std::vector<std::vector<BasisIndex>> factors_;
  std::vector<std::vector<CoproductTerm>> coproduct_;
  std::vector<SparseVec> antipode_;
  std::vector<std::int32_t> product_;
};

using BasisPtr = std::shared_ptr<const HopfBasis>;

}  // namespace renorm
