#include "renorm/fixtures.hpp"

namespace renorm {

namespace {

Rational factorial(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

template <typename ValueFn>
Character from_ladder_values(const BasisPtr& basis, ValueFn value) {
  std::map<RootedTree, LaurentSeries> values;
  for (int n = 1; n <= basis->max_degree(); ++n) values.emplace(RootedTree::ladder(n), value(n));
  return Character::from_tree_values(basis, values);
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

Character ladder_exponential(const BasisPtr& basis) {
  return from_ladder_values(basis, [](int n) { return LaurentSeries::monomial(1 / factorial(n), -n); });
}

Character ladder_power(const BasisPtr& basis) {
  return from_ladder_values(basis, [](int n) { return LaurentSeries::monomial(1, -n); });
}

Rational random_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(draw(rng, 11)) - 5;
  const long den = static_cast<long>(draw(rng, 4)) + 1;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

LaurentSeries random_laurent(std::mt19937_64& rng, int lo, int hi, int cap) {
  std::map<int, Rational> coeffs;
  for (int k = lo; k <= hi; ++k) {
    if (draw(rng, 3) == 0) continue;
    Rational c = random_rational(rng);
    if (c != 0) coeffs.emplace(k, c);
  }
  return LaurentSeries(std::move(coeffs), std::min(lo, 0), cap);
}

Character random_polar_character(const BasisPtr& basis, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<RootedTree, LaurentSeries> values;
  for (BasisIndex i : basis->tree_indices()) {
    const int d = basis->degree(i);
    LaurentSeries v = random_laurent(rng, -d, d);
    if (v.coeff(-d) == 0) v = v + LaurentSeries::monomial(Rational(static_cast<long>(draw(rng, 5)) + 1), -d);
    values.emplace(basis->forest(i).trees().front(), v);
  }
  return Character::from_tree_values(basis, values);
}

Character random_holomorphic_character(const BasisPtr& basis, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<RootedTree, LaurentSeries> values;
  for (BasisIndex i : basis->tree_indices()) {
    const int d = basis->degree(i);
    values.emplace(basis->forest(i).trees().front(), random_laurent(rng, 0, d));
  }
  return Character::from_tree_values(basis, values);
}

}  // namespace renorm
