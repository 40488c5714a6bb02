#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "renorm/linmap.hpp"

namespace renorm {

struct CheckResult {
  std::string name;
  bool passed = true;
  /// First failure, or a short summary when passed.
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  double seconds = 0;
  bool passed() const;
};

struct SuiteConfig {
  int degree = 5;
  std::uint64_t seed = 1;
};

/// rota-baxter, hopf-axioms, theorem, zassenhaus, beta.
const std::vector<std::string>& suite_names();
/// Runs one named suite; "all" is expanded by the caller. Throws InvalidArgument for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

struct TheoremCase {
  std::string label;
  Character phi;
};

/// Both ladder fixtures at `degree` (and at degree + 1 when the ladder cap
/// allows), then `random_count` random polar characters on rooted trees.
std::vector<TheoremCase> theorem_cases(int degree, int random_count, std::uint64_t seed);

CheckResult check_rota_baxter(std::uint64_t seed, int pairs, int lo, int hi);
std::vector<CheckResult> check_hopf_axioms(TreeFamily family, int degree);
std::vector<CheckResult> check_theorem(const std::vector<TheoremCase>& cases);
/// Residual connectedness after every level; level counts on the cases of truncation `count_degree`.
std::vector<CheckResult> check_telescoping(const std::vector<TheoremCase>& cases, int count_degree);
/// phi_bar must fail multiplicativity for at least one case.
CheckResult check_negative_control(const std::vector<TheoremCase>& cases);
/// Identities of the idempotent series up to `max_weight`; the internal-product
/// and word checks stop at `small_weight`.
std::vector<CheckResult> check_descent(int max_weight, int small_weight);
/// Dynkin elements against left-normed brackets on every word of length n over n letters.
CheckResult check_dynkin_brackets(int max_weight);
/// Counterterm and beta identities linking the idempotents to every case.
std::vector<CheckResult> check_bridge(const std::vector<TheoremCase>& cases);
std::vector<CheckResult> check_alpha_morphism(std::uint64_t seed, int convolution_weight, int composition_weight);

}  // namespace renorm
