#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "renorm/errors.hpp"
#include "renorm/fixtures.hpp"
#include "renorm/suites.hpp"

using namespace renorm;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

Outcome collect(const std::vector<CheckResult>& checks) {
  Outcome out;
  for (const auto& c : checks) {
    if (!c.passed && out.passed) out = {false, c.name + ": " + c.detail};
  }
  if (out.passed) out.detail = std::to_string(checks.size()) + " checks";
  return out;
}

bool run(int id, const char* title, double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit <= 0 || seconds < limit;
  const bool passed = out.passed && in_time;
  std::string limit_text = limit > 0 ? " < " + std::to_string(static_cast<int>(limit)) + " s" : "";
  std::printf("[%s] %d %s (%.2f s%s) %s%s\n", passed ? "PASS" : "FAIL", id, title, seconds, limit_text.c_str(),
              out.detail.c_str(), in_time ? "" : " [time limit exceeded]");
  std::fflush(stdout);
  return passed;
}

}  // namespace

int main() {
  bool ok = true;
  const std::vector<TheoremCase> cases = theorem_cases(5, 50, 1);

  ok &= run(1, "Rota-Baxter identity, 1000 pairs", 5, [] {
    const CheckResult r = check_rota_baxter(1, 1000, -5, 5);
    return Outcome{r.passed, r.detail};
  });

  ok &= run(2, "Hopf axioms, rooted trees to 6 and ladders to 8", 30, [] {
    auto checks = check_hopf_axioms(TreeFamily::RootedTrees, 6);
    const auto ladders = check_hopf_axioms(TreeFamily::Ladders, 8);
    checks.insert(checks.end(), ladders.begin(), ladders.end());
    return collect(checks);
  });

  ok &= run(3, "decompositions agree on fixtures and 50 random characters", 120,
            [&] { return collect(check_theorem(cases)); });

  ok &= run(4, "connectedness telescoping", 0, [&] {
    std::vector<TheoremCase> all = cases;
    const BasisPtr rooted = HopfBasis::get(TreeFamily::RootedTrees, 6);
    all.push_back({"random rooted N=6", random_polar_character(rooted, 7)});
    all.push_back({"ladder exponential rooted N=6", ladder_exponential(rooted)});
    return collect(check_telescoping(all, 6));
  });

  ok &= run(5, "descent algebra identities to weight 8", 300, [] { return collect(check_descent(8, 6)); });

  ok &= run(6, "Dynkin elements bracket words, n <= 4", 0, [] {
    const CheckResult r = check_dynkin_brackets(4);
    return Outcome{r.passed, r.detail};
  });

  ok &= run(7, "counterterm and beta bridge, alpha_H morphism", 180, [&] {
    auto checks = check_bridge(cases);
    const auto alpha = check_alpha_morphism(1, 5, 4);
    checks.insert(checks.end(), alpha.begin(), alpha.end());
    return collect(checks);
  });

  ok &= run(8, "preparation map is not a character", 0, [&] {
    const CheckResult r = check_negative_control(cases);
    return Outcome{r.passed, r.detail};
  });

  std::printf("acceptance: %s\n", ok ? "pass" : "fail");
  return ok ? 0 : 1;
}
