#include "renorm/renorm.hpp"

#include "renorm/descent.hpp"
#include "renorm/errors.hpp"

namespace renorm {

namespace {

bool is_unit_character(const LinMap& f) { return is_n_connected(f, f.truncation() + 1, Connectedness::Group); }

LinMap subtract_counit(const LinMap& f) { return f - LinMap::counit(f.basis()); }

}  // namespace

BirkhoffPair bogoliubov_decompose(const Character& phi) {
  const BasisPtr& basis = phi.basis();
  if (!(phi.value(HopfBasis::unit_index()) == LaurentSeries(Rational(1)))) {
    throw InvalidArgument("character must send the unit to 1");
  }
  if (is_unit_character(phi.map())) {
    return {Character::identity(basis), Character::identity(basis), LinMap(basis)};
  }
  std::vector<LaurentSeries> minus(basis->size());
  std::vector<LaurentSeries> plus(basis->size());
  std::vector<LaurentSeries> bar(basis->size());
  minus[HopfBasis::unit_index()] = LaurentSeries(Rational(1));
  plus[HopfBasis::unit_index()] = LaurentSeries(Rational(1));
  for (BasisIndex i = 1; i < basis->size(); ++i) {
    // phi_bar = phi_- * (phi - e); phi_- is known on every proper left factor.
    LaurentSeries acc = phi.value(i);
    for (const auto& term : basis->coproduct(i)) {
      if (term.left == HopfBasis::unit_index() || term.right == HopfBasis::unit_index()) continue;
      acc = acc + term.coeff * (minus[term.left] * phi.value(term.right));
    }
    acc = acc.truncated(basis->max_degree() + 1);
    minus[i] = -r_minus(acc);
    plus[i] = r_plus(acc);
    bar[i] = std::move(acc);
  }
  return {Character::unchecked(LinMap(basis, std::move(minus))), Character::unchecked(LinMap(basis, std::move(plus))),
          LinMap(basis, std::move(bar))};
}

InfChar zeta_extract(const Character& phi, int n) {
  if (n < 1 || !is_n_connected(phi.map(), n, Connectedness::Group)) {
    throw NotConnected("character is not " + std::to_string(n) + "-connected");
  }
  return InfChar::unchecked(graded_component(phi.map(), n));
}

InfChar mu_extract(const Character& phi, int m) {
  if (m < 1) throw InvalidArgument("block index must be positive");
  const auto [lo, hi] = accelerated_block(m, phi.truncation());
  if (!is_n_connected(phi.map(), lo, Connectedness::Group)) {
    throw NotConnected("character is not " + std::to_string(lo) + "-connected");
  }
  return InfChar::unchecked(degree_block(phi.map(), lo, hi));
}

std::pair<int, int> ExpFactorization::level_degrees(int k, int truncation) const {
  if (mode == ExpMode::Plain) return {k, k};
  return accelerated_block(k, truncation);
}

InfChar ExpFactorization::minus_factor(int k, const BasisPtr& basis) const {
  if (k >= 1 && k <= levels()) return minus[static_cast<std::size_t>(k - 1)];
  return InfChar::zero(basis);
}

InfChar ExpFactorization::plus_factor(int k, const BasisPtr& basis) const {
  if (k >= 1 && k <= levels()) return plus[static_cast<std::size_t>(k - 1)];
  return InfChar::zero(basis);
}

ExpFactorization exp_factorize(const Character& phi, ExpMode mode) {
  if (!(phi.value(HopfBasis::unit_index()) == LaurentSeries(Rational(1)))) {
    throw InvalidArgument("character must send the unit to 1");
  }
  ExpFactorization fact;
  fact.mode = mode;
  fact.residuals.push_back(phi);
  Character residual = phi;
  for (int k = 1; !is_unit_character(residual.map()); ++k) {
    const InfChar block = mode == ExpMode::Plain ? zeta_extract(residual, k) : mu_extract(residual, k);
    InfChar lower = apply_r_minus(block);
    InfChar upper = apply_r_plus(block);
    residual = convolve(convolve(conv_exp(-lower), residual), conv_exp(-upper));
    fact.minus.push_back(std::move(lower));
    fact.plus.push_back(std::move(upper));
    fact.residuals.push_back(residual);
  }
  return fact;
}

AssembledPair assemble(const ExpFactorization& fact, const BasisPtr& basis) {
  Character minus_inv = Character::identity(basis);
  Character plus = Character::identity(basis);
  for (const auto& f : fact.minus) minus_inv = convolve(minus_inv, conv_exp(f));
  for (const auto& f : fact.plus) plus = convolve(conv_exp(f), plus);
  return {std::move(minus_inv), std::move(plus)};
}

TheoremReport verify_theorem(const Character& phi) {
  const BasisPtr& basis = phi.basis();
  TheoremReport report{bogoliubov_decompose(phi),
                       exp_factorize(phi, ExpMode::Plain),
                       exp_factorize(phi, ExpMode::Accelerated),
                       Character::identity(basis),
                       Character::identity(basis),
                       Character::identity(basis),
                       Character::identity(basis),
                       false,
                       std::nullopt};
  const AssembledPair plain = assemble(report.plain, basis);
  const AssembledPair accel = assemble(report.accelerated, basis);
  report.plain_minus = conv_inverse(plain.phi_minus_inv);
  report.plain_plus = plain.phi_plus;
  report.accelerated_minus = conv_inverse(accel.phi_minus_inv);
  report.accelerated_plus = accel.phi_plus;

  std::optional<BasisIndex> first;
  auto note = [&first](const Character& a, const Character& b) {
    if (auto d = a.map().first_difference(b.map()); d && (!first || *d < *first)) first = d;
  };
  note(report.bogoliubov.phi_minus, report.plain_minus);
  note(report.bogoliubov.phi_minus, report.accelerated_minus);
  note(report.bogoliubov.phi_plus, report.plain_plus);
  note(report.bogoliubov.phi_plus, report.accelerated_plus);
  report.agreement = !first;
  if (first) report.first_mismatch = basis->forest(*first).code();
  return report;
}

bool bogoliubov_fixed_point_holds(const Character& phi, const Character& phi_minus, const Character& phi_plus) {
  const LinMap e = LinMap::counit(phi.basis());
  const LinMap bar = convolve(phi_minus.map(), subtract_counit(phi.map()));
  return phi_minus.map() == e - apply_r_minus(bar) && phi_plus.map() == e + apply_r_plus(bar);
}

bool polarity_holds(const Character& phi_minus, const Character& phi_plus) {
  const HopfBasis& basis = *phi_minus.basis();
  for (BasisIndex i = 1; i < basis.size(); ++i) {
    if (!phi_minus.value(i).is_polar() || !phi_plus.value(i).is_holomorphic()) return false;
  }
  return true;
}

ZassenhausCounterterm zassenhaus_counterterm(const Character& phi) {
  const BasisPtr& basis = phi.basis();
  const int n_max = phi.truncation();
  ZassenhausCounterterm out;
  out.matches_plain = true;
  if (n_max < 1) return out;
  const Character minus_inv = conv_inverse(bogoliubov_decompose(phi).phi_minus);
  const ExpFactorization plain = exp_factorize(phi, ExpMode::Plain);
  const auto z = zassenhaus(n_max, Side::Left, ExpMode::Plain);
  for (int n = 1; n <= n_max; ++n) {
    InfChar c = InfChar::unchecked(compose(minus_inv.map(), alpha_H(z[static_cast<std::size_t>(n - 1)], basis)));
    if (out.matches_plain && !(c == plain.minus_factor(n, basis))) {
      out.matches_plain = false;
      out.first_mismatch_degree = n;
    }
    out.components.push_back(std::move(c));
  }
  return out;
}

BetaReport beta(const Character& phi) {
  const BasisPtr& basis = phi.basis();
  const int n_max = phi.truncation();
  BetaReport out;
  out.expansion_agrees = true;
  out.antipode_relation_holds = true;
  if (n_max < 1) return out;
  const Character minus = bogoliubov_decompose(phi).phi_minus;
  const Character minus_inv = conv_inverse(minus);
  const auto d = dynkin(n_max);
  const auto right = zassenhaus(n_max, Side::Right, ExpMode::Plain);
  const auto left = zassenhaus(n_max, Side::Left, ExpMode::Plain);
  const ChangeOfBasis table = change_of_basis(n_max);

  std::vector<LinMap> right_images;
  for (int n = 1; n <= n_max; ++n) {
    const auto k = static_cast<std::size_t>(n - 1);
    right_images.push_back(compose(minus.map(), alpha_H(right[k], basis)));
    const LinMap left_image = compose(minus_inv.map(), alpha_H(left[k], basis));
    if (!(-right_images.back() == left_image)) out.antipode_relation_holds = false;
  }
  for (int n = 1; n <= n_max; ++n) {
    const auto k = static_cast<std::size_t>(n - 1);
    out.via_dynkin.push_back(InfChar::unchecked(compose(minus.map(), alpha_H(d[k], basis))));
    LinMap sum(basis);
    for (const auto& [word, c] : table.dynkin_in_right_zassenhaus[k]) {
      LinMap product = LinMap::counit(basis);
      for (int part : word.parts()) product = convolve(product, right_images[static_cast<std::size_t>(part - 1)]);
      sum += c * product;
    }
    if (!(sum == out.via_dynkin.back().map())) out.expansion_agrees = false;
    out.via_zassenhaus.push_back(std::move(sum));
  }
  return out;
}

}  // namespace renorm
