#include "renorm/suites.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "renorm/descent.hpp"
#include "renorm/errors.hpp"
#include "renorm/fixtures.hpp"
#include "renorm/renorm.hpp"

namespace renorm {

namespace {

// Records the first failure of a check.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }
  void require(bool ok, const std::string& what) {
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what;
    }
  }
  void summary(std::string text) {
    if (result_.passed) result_.detail = std::move(text);
  }
  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

// Multiplicativity on every pair of positive-degree forests, ignoring the unit value.
bool multiplicative_on_products(const LinMap& f) {
  const HopfBasis& basis = *f.basis();
  for (BasisIndex i = 1; i < basis.size(); ++i) {
    for (BasisIndex j = i; j < basis.size(); ++j) {
      const auto ij = basis.product(i, j);
      if (!ij) break;
      if (!(f.value(*ij) == f.value(i) * f.value(j))) return false;
    }
  }
  return true;
}

DescentElement random_descent(std::mt19937_64& rng, int lo, int hi) {
  DescentElement a;
  for (int w = lo; w <= hi; ++w) {
    for (const auto& c : compositions_of(w)) {
      if (rng() % 2 == 0) a.add(c, random_rational(rng));
    }
  }
  return a;
}

TensorElement left_normed_bracket(const Word& w) {
  TensorElement t(Word{w.front()});
  for (std::size_t i = 1; i < w.size(); ++i) t = bracket(t, TensorElement(Word{w[i]}));
  return t;
}

std::string rational_list(const std::vector<Rational>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + to_string(xs[i]);
  return s;
}

}  // namespace

bool SuiteResult::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"rota-baxter", "hopf-axioms", "theorem", "zassenhaus", "beta"};
  return names;
}

std::vector<TheoremCase> theorem_cases(int degree, int random_count, std::uint64_t seed) {
  std::vector<TheoremCase> cases;
  for (int n = degree; n <= std::min(degree + 1, degree_cap(TreeFamily::Ladders)); ++n) {
    const BasisPtr ladders = HopfBasis::get(TreeFamily::Ladders, n);
    cases.push_back({"ladder-exponential N=" + std::to_string(n), ladder_exponential(ladders)});
    cases.push_back({"ladder-power N=" + std::to_string(n), ladder_power(ladders)});
  }
  const BasisPtr trees = HopfBasis::get(TreeFamily::RootedTrees, degree);
  for (int i = 0; i < random_count; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    cases.push_back({"random-polar seed=" + std::to_string(s), random_polar_character(trees, s)});
  }
  return cases;
}

CheckResult check_rota_baxter(std::uint64_t seed, int pairs, int lo, int hi) {
  Check check("rota-baxter identity");
  std::mt19937_64 rng(seed);
  for (int i = 0; i < pairs; ++i) {
    const LaurentSeries x = random_laurent(rng, lo, hi, hi + 1);
    const LaurentSeries y = random_laurent(rng, lo, hi, hi + 1);
    check.require(rb_check(x, y), "fails for x = " + x.to_string() + ", y = " + y.to_string());
  }
  check.summary(std::to_string(pairs) + " pairs on exponents [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return check.done();
}

std::vector<CheckResult> check_hopf_axioms(TreeFamily family, int degree) {
  const BasisPtr basis = HopfBasis::get(family, degree);
  const std::string where = " (" + to_string(family) + ", N=" + std::to_string(degree) + ")";
  Check coassoc("coassociativity" + where);
  Check morphism("coproduct is an algebra morphism" + where);
  Check antipode_axiom("antipode axioms" + where);
  Check involution("antipode squares to the identity" + where);
  for (BasisIndex i = 0; i < basis->size(); ++i) {
    const Forest& f = basis->forest(i);
    const HopfTensor delta = coproduct(f);
    coassoc.require(coassoc_left(delta) == coassoc_right(delta), "fails on " + f.code());
    const HopfElement expected = f.is_unit() ? HopfElement::unit() : HopfElement();
    antipode_axiom.require(antipode_left_convolution(delta) == expected && antipode_right_convolution(delta) == expected,
                           "fails on " + f.code());
    involution.require(antipode(antipode(f)) == HopfElement(f), "fails on " + f.code());
    for (BasisIndex j = i; j < basis->size(); ++j) {
      const Forest& g = basis->forest(j);
      if (f.degree() + g.degree() > degree) break;
      morphism.require(coproduct(f * g) == coproduct(f) * coproduct(g), "fails on " + f.code() + " times " + g.code());
    }
  }
  const std::string count = std::to_string(basis->size()) + " forests";
  coassoc.summary(count);
  morphism.summary(count);
  antipode_axiom.summary(count);
  involution.summary(count);
  return {coassoc.done(), morphism.done(), antipode_axiom.done(), involution.done()};
}

std::vector<CheckResult> check_theorem(const std::vector<TheoremCase>& cases) {
  Check agreement("bogoliubov, plain and accelerated decompositions agree");
  Check polarity("counterterm polar, renormalized character holomorphic");
  Check characters("both factors are characters");
  Check fixed_point("recursion fixed point");
  Check reconstruction("inverse counterterm times renormalized character gives phi");
  for (const auto& c : cases) {
    const TheoremReport r = verify_theorem(c.phi);
    const Character& minus = r.bogoliubov.phi_minus;
    const Character& plus = r.bogoliubov.phi_plus;
    agreement.require(r.agreement, c.label + ": first mismatch at " + r.first_mismatch.value_or("?"));
    polarity.require(polarity_holds(minus, plus), c.label);
    characters.require(is_character(minus.map()) && is_character(plus.map()) && is_character(r.plain_minus.map()) &&
                           is_character(r.plain_plus.map()) && is_character(r.accelerated_minus.map()) &&
                           is_character(r.accelerated_plus.map()),
                       c.label);
    fixed_point.require(bogoliubov_fixed_point_holds(c.phi, minus, plus), c.label);
    reconstruction.require(convolve(conv_inverse(minus), plus) == c.phi, c.label);
  }
  const std::string count = std::to_string(cases.size()) + " characters";
  for (Check* ch : {&agreement, &polarity, &characters, &fixed_point, &reconstruction}) ch->summary(count);
  return {agreement.done(), polarity.done(), characters.done(), fixed_point.done(), reconstruction.done()};
}

std::vector<CheckResult> check_telescoping(const std::vector<TheoremCase>& cases, int count_degree) {
  Check plain_check("plain residual after k levels is (k+1)-connected");
  Check accel_check("accelerated residual after k blocks is 2^k-connected");
  Check counts("level counts at N=" + std::to_string(count_degree));
  const int expected_blocks = static_cast<int>(std::ceil(std::log2(count_degree + 1.0)));
  bool saw_full = false;
  std::string seen;
  for (const auto& c : cases) {
    const ExpFactorization plain = exp_factorize(c.phi, ExpMode::Plain);
    const ExpFactorization accel = exp_factorize(c.phi, ExpMode::Accelerated);
    for (std::size_t k = 0; k < plain.residuals.size(); ++k) {
      plain_check.require(is_n_connected(plain.residuals[k].map(), static_cast<int>(k) + 1, Connectedness::Group),
                          c.label + " at level " + std::to_string(k));
    }
    for (std::size_t k = 0; k < accel.residuals.size(); ++k) {
      accel_check.require(is_n_connected(accel.residuals[k].map(), 1 << k, Connectedness::Group),
                          c.label + " at block " + std::to_string(k));
    }
    if (c.phi.truncation() != count_degree) continue;
    counts.require(plain.levels() <= count_degree && accel.levels() <= expected_blocks,
                   c.label + ": " + std::to_string(plain.levels()) + " plain, " + std::to_string(accel.levels()) +
                       " accelerated");
    if (plain.levels() == count_degree && accel.levels() == expected_blocks) {
      saw_full = true;
      if (seen.empty()) seen = c.label;
    }
  }
  counts.require(saw_full, "no case needed the full " + std::to_string(count_degree) + " plain levels");
  counts.summary(std::to_string(expected_blocks) + " accelerated blocks vs " + std::to_string(count_degree) +
                 " plain levels (" + seen + ")");
  plain_check.summary(std::to_string(cases.size()) + " characters");
  accel_check.summary(std::to_string(cases.size()) + " characters");
  return {plain_check.done(), accel_check.done(), counts.done()};
}

CheckResult check_negative_control(const std::vector<TheoremCase>& cases) {
  Check check("preparation map is not a character");
  std::string witness;
  for (const auto& c : cases) {
    const LinMap bar = bogoliubov_decompose(c.phi).phi_bar;
    if (!multiplicative_on_products(bar)) {
      witness = c.label;
      break;
    }
  }
  check.require(!witness.empty(), "phi_bar multiplicative on every case");
  check.summary("fails multiplicativity on " + witness);
  return check.done();
}

std::vector<CheckResult> check_descent(int max_weight, int small_weight) {
  if (max_weight > permutation_cap()) {
    throw DegreeTooLarge("weight " + std::to_string(max_weight) + " exceeds the cap " +
                         std::to_string(permutation_cap()));
  }
  const int w = max_weight;
  const DescentElement id = identity_series(w);
  const auto left = zassenhaus(w, Side::Left, ExpMode::Plain);
  const auto right = zassenhaus(w, Side::Right, ExpMode::Plain);
  const auto accel_left = zassenhaus(w, Side::Left, ExpMode::Accelerated);
  const auto accel_right = zassenhaus(w, Side::Right, ExpMode::Accelerated);

  Check products("products of exponentials give Id up to weight " + std::to_string(w));
  Check primitive("idempotent series are primitive");
  {
    DescentElement pl = DescentElement::unit();
    DescentElement pr = DescentElement::unit();
    for (int n = 1; n <= w; ++n) {
      const auto k = static_cast<std::size_t>(n - 1);
      pl = d_convolve(pl, d_exp(left[k], w), w);
      pr = d_convolve(d_exp(right[k], w), pr, w);
      for (const auto* series : {&left, &right, &accel_left, &accel_right}) {
        primitive.require(is_primitive((*series)[k]), "weight " + std::to_string(n));
      }
    }
    products.require(pl == id, "left series");
    products.require(pr == id, "right series");
    DescentElement al = DescentElement::unit();
    DescentElement ar = DescentElement::unit();
    for (int m = 1;; ++m) {
      const auto [lo, hi] = accelerated_block(m, w);
      if (lo > w) break;
      DescentElement bl, br;
      for (int n = lo; n <= hi; ++n) {
        bl += accel_left[static_cast<std::size_t>(n - 1)];
        br += accel_right[static_cast<std::size_t>(n - 1)];
      }
      primitive.require(is_primitive(bl) && is_primitive(br), "accelerated block " + std::to_string(m));
      al = d_convolve(al, d_exp(bl, w), w);
      ar = d_convolve(d_exp(br, w), ar, w);
    }
    products.require(al == id, "accelerated left series");
    products.require(ar == id, "accelerated right series");
  }
  products.summary("left, right, accelerated left and right");
  primitive.summary("all four series and every accelerated block");

  Check duality("S o (-Z~_n) = Z_n up to weight " + std::to_string(small_weight));
  Check involution("S_n o S_n = B_(n) up to weight " + std::to_string(small_weight));
  Check quasi("Z_n o Z_n = c_n Z_n up to weight " + std::to_string(small_weight));
  Check words("Z_n sends words on distinct letters into Lie(X) up to weight " + std::to_string(small_weight));
  const DescentElement s = antipode_series(small_weight);
  std::vector<Rational> scalars;
  for (int n = 1; n <= small_weight; ++n) {
    const auto k = static_cast<std::size_t>(n - 1);
    const DescentElement sn = s.component(n);
    duality.require(internal_product(sn, -right[k]) == left[k], "weight " + std::to_string(n));
    involution.require(internal_product(sn, sn) == DescentElement::projection(n), "weight " + std::to_string(n));
    const DescentElement sq = internal_product(left[k], left[k]);
    const Rational c = sq.coeff(Composition({n})) / left[k].coeff(Composition({n}));
    quasi.require(sq == left[k] * c, "weight " + std::to_string(n));
    scalars.push_back(c);
    const PermutationElement p = to_permutations(left[k], n);
    for (const auto& letters : all_permutations(n)) {
      words.require(is_lie_element(act_on_word(p, letters)), "weight " + std::to_string(n));
    }
  }
  duality.summary("holds");
  involution.summary("holds");
  quasi.summary("c_n = " + rational_list(scalars));
  words.summary("every word checked");

  Check basis_change("Zassenhaus words are unitriangular in the B basis up to weight " + std::to_string(w));
  for (int n = 1; n <= w; ++n) {
    basis_change.require(words_unitriangular(left, n) && words_unitriangular(right, n), "weight " + std::to_string(n));
  }
  try {
    const ChangeOfBasis table = change_of_basis(w);
    basis_change.require(static_cast<int>(table.dynkin_in_right_zassenhaus.size()) == w, "incomplete table");
  } catch (const Error& e) {
    basis_change.require(false, e.what());
  }
  basis_change.summary("left and right words; Dynkin expansion solved");
  return {products.done(), primitive.done(), duality.done(), involution.done(),
          quasi.done(),    words.done(),     basis_change.done()};
}

CheckResult check_dynkin_brackets(int max_weight) {
  Check check("Dynkin elements act as left-normed brackets up to weight " + std::to_string(max_weight));
  const auto d = dynkin(max_weight);
  std::size_t count = 0;
  for (int n = 1; n <= max_weight; ++n) {
    const PermutationElement p = to_permutations(d[static_cast<std::size_t>(n - 1)], n);
    Word w(static_cast<std::size_t>(n), 1);
    while (true) {
      ++count;
      check.require(act_on_word(p, w) == left_normed_bracket(w), "weight " + std::to_string(n));
      std::size_t i = w.size();
      while (i > 0 && w[i - 1] == n) w[--i] = 1;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
  check.summary(std::to_string(count) + " words");
  return check.done();
}

std::vector<CheckResult> check_bridge(const std::vector<TheoremCase>& cases) {
  Check counterterm("inverse counterterm o Z_n equals the plain minus factors");
  Check antipode_relation("-phi_- o Z~_n = phi_-^{-1} o Z_n");
  Check expansion("beta via Dynkin equals the right Zassenhaus expansion");
  Check plus_side("phi_+ o Z~_n equals the plain plus factors");
  Check blocks("inverse counterterm o accelerated blocks equals the accelerated minus factors");
  for (const auto& c : cases) {
    const BasisPtr& basis = c.phi.basis();
    const int n_max = c.phi.truncation();
    const ZassenhausCounterterm zc = zassenhaus_counterterm(c.phi);
    counterterm.require(zc.matches_plain,
                        c.label + " at degree " + std::to_string(zc.first_mismatch_degree.value_or(0)));
    const BetaReport b = beta(c.phi);
    antipode_relation.require(b.antipode_relation_holds, c.label);
    expansion.require(b.expansion_agrees, c.label);

    const BirkhoffPair pair = bogoliubov_decompose(c.phi);
    const ExpFactorization plain = exp_factorize(c.phi, ExpMode::Plain);
    const ExpFactorization accel = exp_factorize(c.phi, ExpMode::Accelerated);
    const auto right = zassenhaus(n_max, Side::Right, ExpMode::Plain);
    const auto accel_left = zassenhaus(n_max, Side::Left, ExpMode::Accelerated);
    const Character minus_inv = conv_inverse(pair.phi_minus);
    for (int n = 1; n <= n_max; ++n) {
      const LinMap image = compose(pair.phi_plus.map(), alpha_H(right[static_cast<std::size_t>(n - 1)], basis));
      plus_side.require(image == plain.plus_factor(n, basis).map(), c.label + " at degree " + std::to_string(n));
    }
    for (int m = 1;; ++m) {
      const auto [lo, hi] = accelerated_block(m, n_max);
      if (lo > n_max) break;
      DescentElement block;
      for (int n = lo; n <= hi; ++n) block += accel_left[static_cast<std::size_t>(n - 1)];
      const LinMap image = compose(minus_inv.map(), alpha_H(block, basis));
      blocks.require(image == accel.minus_factor(m, basis).map(), c.label + " at block " + std::to_string(m));
    }
  }
  const std::string count = std::to_string(cases.size()) + " characters";
  for (Check* ch : {&counterterm, &antipode_relation, &expansion, &plus_side, &blocks}) ch->summary(count);
  return {counterterm.done(), antipode_relation.done(), expansion.done(), plus_side.done(), blocks.done()};
}

std::vector<CheckResult> check_alpha_morphism(std::uint64_t seed, int convolution_weight, int composition_weight) {
  std::mt19937_64 rng(seed);
  const BasisPtr basis = HopfBasis::get(TreeFamily::RootedTrees, convolution_weight);
  Check identity("alpha_H(Id) is the identity of H");
  identity.require(alpha_H(identity_series(convolution_weight), basis) == HopfEndo::identity(basis), "differs");
  identity.summary("N=" + std::to_string(convolution_weight));

  Check conv("alpha_H respects convolution up to weight " + std::to_string(convolution_weight));
  for (int wa = 0; wa <= convolution_weight; ++wa) {
    const int wb = convolution_weight - wa;
    const DescentElement a = random_descent(rng, 0, wa);
    const DescentElement b = random_descent(rng, 0, wb);
    conv.require(alpha_H(a * b, basis) == convolve(alpha_H(a, basis), alpha_H(b, basis)),
                 "weights " + std::to_string(wa) + " and " + std::to_string(wb));
  }
  conv.summary("random pairs of every weight split");

  Check comp("alpha_H respects composition up to weight " + std::to_string(composition_weight));
  for (int n = 1; n <= composition_weight; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const DescentElement a = random_descent(rng, n, n);
      const DescentElement b = random_descent(rng, n, n);
      if (a.is_zero() || b.is_zero()) continue;
      comp.require(alpha_H(internal_product(a, b), basis) == compose(alpha_H(a, basis), alpha_H(b, basis)),
                   "weight " + std::to_string(n));
    }
  }
  comp.summary("three random pairs per weight");
  return {identity.done(), conv.done(), comp.done()};
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  SuiteResult result;
  result.name = name;
  const auto start = std::chrono::steady_clock::now();
  const int n = config.degree;
  auto append = [&result](std::vector<CheckResult> checks) {
    for (auto& c : checks) result.checks.push_back(std::move(c));
  };
  if (name == "rota-baxter") {
    result.checks.push_back(check_rota_baxter(config.seed, 1000, -5, 5));
  } else if (name == "hopf-axioms") {
    append(check_hopf_axioms(TreeFamily::RootedTrees, n));
    append(check_hopf_axioms(TreeFamily::Ladders, n));
  } else if (name == "theorem") {
    const auto cases = theorem_cases(n, 50, config.seed);
    append(check_theorem(cases));
    append(check_telescoping(cases, n));
    result.checks.push_back(check_negative_control(cases));
  } else if (name == "zassenhaus") {
    append(check_descent(n, std::min(n, 6)));
    result.checks.push_back(check_dynkin_brackets(std::min(n, 4)));
  } else if (name == "beta") {
    append(check_bridge(theorem_cases(n, 50, config.seed)));
    append(check_alpha_morphism(config.seed, n, std::min(n, 4)));
  } else {
    throw InvalidArgument("unknown suite '" + name + "'");
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace renorm
