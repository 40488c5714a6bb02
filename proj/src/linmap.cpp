#include "renorm/linmap.hpp"

#include <algorithm>

#include "renorm/errors.hpp"

namespace renorm {

namespace {

SparseVec to_sparse(std::map<BasisIndex, Rational>& acc) {
  SparseVec v;
  v.reserve(acc.size());
  for (auto& [i, c] : acc) {
    if (c != 0) v.emplace_back(i, std::move(c));
  }
  return v;
}

void require_same(const HopfBasis& a, const HopfBasis& b) {
  if (!a.same_as(b)) {
    throw TruncationMismatch("maps over different bases: " + to_string(a.family()) + "/N=" +
                             std::to_string(a.max_degree()) + " vs " + to_string(b.family()) +
                             "/N=" + std::to_string(b.max_degree()));
  }
}

}  // namespace

// ---------------------------------------------------------------- LinMap

LinMap::LinMap(BasisPtr basis) : basis_(std::move(basis)), values_(basis_->size()) {}

LinMap::LinMap(BasisPtr basis, std::vector<LaurentSeries> values) : basis_(std::move(basis)), values_(std::move(values)) {
  if (values_.size() != basis_->size()) throw InvalidArgument("value table does not match the basis size");
  clamp_caps();
}

void LinMap::clamp_caps() {
  const int cap = truncation() + 1;
  for (auto& v : values_) {
    if (v.cap() > cap) v = v.truncated(cap);
  }
}

LinMap LinMap::counit(BasisPtr basis) {
  std::vector<LaurentSeries> values(basis->size());
  values[HopfBasis::unit_index()] = LaurentSeries(Rational(1));
  return LinMap(std::move(basis), std::move(values));
}

LaurentSeries LinMap::value(const Forest& f) const {
  if (f.degree() > truncation()) return LaurentSeries();
  return values_[basis_->index(f)];
}

LaurentSeries LinMap::value(const SparseVec& x) const {
  LaurentSeries r;
  for (const auto& [i, c] : x) r += values_[i] * c;
  return r;
}

void LinMap::require_same_basis(const LinMap& other) const { require_same(*basis_, *other.basis_); }

LinMap LinMap::operator-() const {
  LinMap r = *this;
  for (auto& v : r.values_) v = -v;
  return r;
}

LinMap& LinMap::operator+=(const LinMap& other) {
  require_same_basis(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

LinMap& LinMap::operator-=(const LinMap& other) {
  require_same_basis(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

LinMap& LinMap::operator*=(const Rational& s) {
  for (auto& v : values_) v *= s;
  return *this;
}

std::optional<BasisIndex> LinMap::first_difference(const LinMap& other) const {
  require_same_basis(other);
  for (BasisIndex i = 0; i < values_.size(); ++i) {
    if (!(values_[i] == other.values_[i])) return i;
  }
  return std::nullopt;
}

LinMap convolve(const LinMap& f, const LinMap& g) {
  require_same(*f.basis(), *g.basis());
  const HopfBasis& basis = *f.basis();
  std::vector<LaurentSeries> out(basis.size());
  for (BasisIndex x = 0; x < basis.size(); ++x) {
    LaurentSeries acc;
    bool any = false;
    for (const auto& term : basis.coproduct(x)) {
      const LaurentSeries& a = f.value(term.left);
      if (a.is_zero() && a.is_exact()) continue;
      const LaurentSeries& b = g.value(term.right);
      if (b.is_zero() && b.is_exact()) continue;
      LaurentSeries p = a * b;
      if (term.coeff != 1) p *= term.coeff;
      if (any) {
        acc += p;
      } else {
        acc = std::move(p);
        any = true;
      }
    }
    out[x] = std::move(acc);
  }
  return LinMap(f.basis(), std::move(out));
}

LinMap degree_block(const LinMap& f, int lo, int hi) {
  std::vector<LaurentSeries> out(f.basis()->size());
  for (BasisIndex i = 0; i < out.size(); ++i) {
    const int d = f.basis()->degree(i);
    if (d >= lo && d <= hi) out[i] = f.value(i);
  }
  return LinMap(f.basis(), std::move(out));
}

LinMap graded_component(const LinMap& f, int n) { return degree_block(f, n, n); }

LinMap apply_r_minus(const LinMap& f) {
  std::vector<LaurentSeries> out;
  out.reserve(f.values().size());
  for (const auto& v : f.values()) out.push_back(r_minus(v));
  return LinMap(f.basis(), std::move(out));
}

LinMap apply_r_plus(const LinMap& f) {
  std::vector<LaurentSeries> out;
  out.reserve(f.values().size());
  for (const auto& v : f.values()) out.push_back(r_plus(v));
  return LinMap(f.basis(), std::move(out));
}

namespace {

bool all_zero(const LinMap& f) {
  return std::all_of(f.values().begin(), f.values().end(), [](const LaurentSeries& v) { return v.is_zero(); });
}

}  // namespace

LinMap conv_log(const LinMap& f) {
  if (!(f.value(HopfBasis::unit_index()) == LaurentSeries(Rational(1)))) {
    throw InvalidArgument("conv_log requires f(1) = 1");
  }
  const LinMap g = f - LinMap::counit(f.basis());
  LinMap result = g;
  LinMap power = g;
  for (int k = 2; k <= f.truncation(); ++k) {
    power = convolve(power, g);
    if (all_zero(power)) break;
    const Rational c((k % 2 == 0) ? -1 : 1, k);
    result += power * c;
  }
  return result;
}

LinMap conv_exp(const LinMap& rho) {
  if (!rho.value(HopfBasis::unit_index()).is_zero()) throw InvalidArgument("conv_exp requires rho(1) = 0");
  LinMap result = LinMap::counit(rho.basis()) + rho;
  LinMap power = rho;
  for (int k = 2; k <= rho.truncation(); ++k) {
    power = convolve(power, rho);
    if (all_zero(power)) break;
    power *= Rational(1, k);
    result += power;
  }
  return result;
}

bool is_n_connected(const LinMap& f, int n, Connectedness kind) {
  const HopfBasis& basis = *f.basis();
  const LaurentSeries& at_unit = f.value(HopfBasis::unit_index());
  if (kind == Connectedness::Group) {
    if (!(at_unit == LaurentSeries(Rational(1)))) return false;
  } else if (n > 0 && !at_unit.is_zero()) {
    return false;
  }
  for (BasisIndex i = 1; i < basis.size(); ++i) {
    if (basis.degree(i) >= n) break;
    if (!f.value(i).is_zero()) return false;
  }
  return true;
}

bool is_character(const LinMap& f) {
  const HopfBasis& basis = *f.basis();
  if (!(f.value(HopfBasis::unit_index()) == LaurentSeries(Rational(1)))) return false;
  for (BasisIndex i = 1; i < basis.size(); ++i) {
    for (BasisIndex j = i; j < basis.size(); ++j) {
      const auto p = basis.product(i, j);
      if (!p) break;  // forests are sorted by degree, so later j only grow
      if (!(f.value(*p) == f.value(i) * f.value(j))) return false;
    }
  }
  return true;
}

bool is_inf_char(const LinMap& f) {
  const HopfBasis& basis = *f.basis();
  if (!f.value(HopfBasis::unit_index()).is_zero()) return false;
  for (BasisIndex i = 1; i < basis.size(); ++i) {
    if (basis.factors(i).size() >= 2 && !f.value(i).is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Character / InfChar

namespace {

std::vector<LaurentSeries> tree_table(const HopfBasis& basis, const std::map<RootedTree, LaurentSeries>& tree_values) {
  std::vector<LaurentSeries> out(basis.size());
  for (const auto& [t, v] : tree_values) {
    const auto i = basis.find(Forest(t));
    if (!i) {
      throw InvalidArgument("tree '" + t.code() + "' is not a generator of the " + to_string(basis.family()) +
                            " basis up to degree " + std::to_string(basis.max_degree()));
    }
    out[*i] = v;
  }
  return out;
}

}  // namespace

Character Character::from_tree_values(BasisPtr basis, const std::map<RootedTree, LaurentSeries>& tree_values) {
  std::vector<LaurentSeries> out = tree_table(*basis, tree_values);
  out[HopfBasis::unit_index()] = LaurentSeries(Rational(1));
  for (BasisIndex i = 1; i < basis->size(); ++i) {
    const auto& factors = basis->factors(i);
    if (factors.size() < 2) continue;
    LaurentSeries v = out[factors.front()];
    for (std::size_t k = 1; k < factors.size(); ++k) v = v * out[factors[k]];
    out[i] = std::move(v);
  }
  return Character(LinMap(std::move(basis), std::move(out)));
}

Character Character::from_linmap(LinMap f) {
  if (!is_character(f)) throw InvalidArgument("linear map is not a character");
  return Character(std::move(f));
}

InfChar InfChar::from_tree_values(BasisPtr basis, const std::map<RootedTree, LaurentSeries>& tree_values) {
  std::vector<LaurentSeries> out = tree_table(*basis, tree_values);
  return InfChar(LinMap(std::move(basis), std::move(out)));
}

InfChar InfChar::from_linmap(LinMap f) {
  if (!is_inf_char(f)) throw InvalidArgument("linear map is not an infinitesimal character");
  return InfChar(std::move(f));
}

bool InfChar::is_zero() const { return all_zero(map_); }

Character convolve(const Character& a, const Character& b) {
  // Multiplicativity lets us convolve on trees only and extend.
  require_same(*a.basis(), *b.basis());
  const HopfBasis& basis = *a.basis();
  std::map<RootedTree, LaurentSeries> on_trees;
  for (BasisIndex t : basis.tree_indices()) {
    LaurentSeries acc;
    for (const auto& term : basis.coproduct(t)) {
      LaurentSeries p = a.value(term.left) * b.value(term.right);
      if (term.coeff != 1) p *= term.coeff;
      acc += p;
    }
    on_trees.emplace(basis.forest(t).trees().front(), std::move(acc));
  }
  return Character::from_tree_values(a.basis(), on_trees);
}

Character conv_inverse(const Character& phi) {
  const HopfBasis& basis = *phi.basis();
  std::map<RootedTree, LaurentSeries> on_trees;
  for (BasisIndex t : basis.tree_indices()) {
    on_trees.emplace(basis.forest(t).trees().front(), phi.map().value(basis.antipode(t)));
  }
  return Character::from_tree_values(phi.basis(), on_trees);
}

InfChar conv_log(const Character& phi) { return InfChar::unchecked(conv_log(phi.map())); }

Character conv_exp(const InfChar& rho) { return Character::unchecked(conv_exp(rho.map())); }

InfChar graded_component(const InfChar& rho, int n) { return InfChar::unchecked(graded_component(rho.map(), n)); }

InfChar apply_r_minus(const InfChar& rho) { return InfChar::unchecked(apply_r_minus(rho.map())); }

InfChar apply_r_plus(const InfChar& rho) { return InfChar::unchecked(apply_r_plus(rho.map())); }

// ---------------------------------------------------------------- HopfEndo

HopfEndo::HopfEndo(BasisPtr basis) : basis_(std::move(basis)), columns_(basis_->size()) {}

HopfEndo::HopfEndo(BasisPtr basis, std::vector<SparseVec> columns) : basis_(std::move(basis)), columns_(std::move(columns)) {
  if (columns_.size() != basis_->size()) throw InvalidArgument("column table does not match the basis size");
}

HopfEndo HopfEndo::identity(BasisPtr basis) {
  std::vector<SparseVec> cols(basis->size());
  for (BasisIndex i = 0; i < cols.size(); ++i) cols[i].emplace_back(i, Rational(1));
  return HopfEndo(std::move(basis), std::move(cols));
}

HopfEndo HopfEndo::projection(BasisPtr basis, int n) {
  std::vector<SparseVec> cols(basis->size());
  const auto [first, last] = basis->degree_range(n);
  for (BasisIndex i = first; i < last; ++i) cols[i].emplace_back(i, Rational(1));
  return HopfEndo(std::move(basis), std::move(cols));
}

HopfElement HopfEndo::apply(const HopfElement& x) const {
  HopfElement r;
  for (const auto& [f, c] : x.terms()) {
    if (f.degree() > basis_->max_degree()) continue;
    for (const auto& [j, d] : columns_[basis_->index(f)]) r.add(basis_->forest(j), c * d);
  }
  return r;
}

HopfEndo& HopfEndo::operator+=(const HopfEndo& other) {
  require_same(*basis_, *other.basis_);
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    std::map<BasisIndex, Rational> acc;
    for (const auto& [j, c] : columns_[i]) acc[j] += c;
    for (const auto& [j, c] : other.columns_[i]) acc[j] += c;
    columns_[i] = to_sparse(acc);
  }
  return *this;
}

HopfEndo& HopfEndo::operator*=(const Rational& s) {
  for (auto& col : columns_) {
    if (s == 0) {
      col.clear();
      continue;
    }
    for (auto& [j, c] : col) c *= s;
  }
  return *this;
}

bool operator==(const HopfEndo& a, const HopfEndo& b) {
  require_same(*a.basis_, *b.basis_);
  return a.columns_ == b.columns_;
}

HopfEndo convolve(const HopfEndo& f, const HopfEndo& g) {
  require_same(*f.basis(), *g.basis());
  const HopfBasis& basis = *f.basis();
  std::vector<SparseVec> cols(basis.size());
  for (BasisIndex x = 0; x < basis.size(); ++x) {
    std::map<BasisIndex, Rational> acc;
    for (const auto& term : basis.coproduct(x)) {
      const SparseVec& fl = f.column(term.left);
      if (fl.empty()) continue;
      const SparseVec& gr = g.column(term.right);
      for (const auto& [a, ca] : fl) {
        for (const auto& [b, cb] : gr) {
          const auto p = basis.product(a, b);
          if (!p) continue;
          acc[*p] += term.coeff * ca * cb;
        }
      }
    }
    cols[x] = to_sparse(acc);
  }
  return HopfEndo(f.basis(), std::move(cols));
}

HopfEndo compose(const HopfEndo& f, const HopfEndo& g) {
  require_same(*f.basis(), *g.basis());
  std::vector<SparseVec> cols(f.basis()->size());
  for (BasisIndex x = 0; x < cols.size(); ++x) {
    std::map<BasisIndex, Rational> acc;
    for (const auto& [j, c] : g.column(x)) {
      for (const auto& [k, d] : f.column(j)) acc[k] += c * d;
    }
    cols[x] = to_sparse(acc);
  }
  return HopfEndo(f.basis(), std::move(cols));
}

LinMap compose(const LinMap& phi, const HopfEndo& e) {
  require_same(*phi.basis(), *e.basis());
  std::vector<LaurentSeries> out(phi.basis()->size());
  for (BasisIndex x = 0; x < out.size(); ++x) out[x] = phi.value(e.column(x));
  return LinMap(phi.basis(), std::move(out));
}

}  // namespace renorm
