// renorm: Birkhoff decompositions, idempotent tables and verification suites.
//
// Exit codes: 0 success, 1 internal error, 2 bad input or usage,
// 3 pole bound or degree cap exceeded, 4 decompositions disagree.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "renorm/descent.hpp"
#include "renorm/errors.hpp"
#include "renorm/json_io.hpp"
#include "renorm/renorm.hpp"
#include "renorm/suites.hpp"

using namespace renorm;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;
constexpr int kExitDisagree = 4;

struct Options {
  std::string input;
  std::string output;
  std::optional<int> degree;
  std::string method = "all";
  std::string series = "all";
  std::string suite;
  std::string format;  // empty: the command's default
  std::uint64_t seed = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw InvalidArgument("cannot write '" + opt.output + "'");
  out << text;
}

Character load_character(const Options& opt) { return character_from_json(parse_json(read_file(opt.input)), opt.degree); }

std::string character_table(const std::string& label, const LinMap& f) {
  std::ostringstream os;
  const HopfBasis& basis = *f.basis();
  for (BasisIndex i : basis.tree_indices()) os << label << ' ' << basis.forest(i).code() << ": " << f.value(i).to_string() << '\n';
  return os.str();
}

int cmd_decompose(const Options& opt) {
  const Character phi = load_character(opt);
  const TheoremReport report = verify_theorem(phi);
  if (opt.format == "table") {
    std::ostringstream os;
    const Character& minus = opt.method == "zassenhaus"    ? report.plain_minus
                             : opt.method == "accelerated" ? report.accelerated_minus
                                                           : report.bogoliubov.phi_minus;
    const Character& plus = opt.method == "zassenhaus"    ? report.plain_plus
                            : opt.method == "accelerated" ? report.accelerated_plus
                                                          : report.bogoliubov.phi_plus;
    os << character_table("phi_minus", minus.map()) << character_table("phi_plus", plus.map());
    os << "plain levels: " << report.plain.levels() << '\n';
    os << "accelerated levels: " << report.accelerated.levels() << '\n';
    os << "agreement: " << (report.agreement ? "true" : "false") << '\n';
    if (report.first_mismatch) os << "first mismatch: " << *report.first_mismatch << '\n';
    emit(opt, os.str());
  } else {
    emit(opt, decomposition_report(report, opt.method).dump(2) + "\n");
  }
  return report.agreement ? 0 : kExitDisagree;
}

std::string words_string(const std::map<Composition, Rational>& coeffs) {
  DescentElement a;
  for (const auto& [c, x] : coeffs) a.add(c, x);
  return a.to_string();
}

int cmd_idempotents(const Options& opt) {
  const int n = opt.degree.value_or(4);
  if (n < 1) throw InvalidArgument("degree must be at least 1");
  if (n > permutation_cap()) {
    throw DegreeTooLarge("degree " + std::to_string(n) + " exceeds the cap " + std::to_string(permutation_cap()));
  }
  const std::vector<std::pair<std::string, std::vector<DescentElement>>> all = {
      {"left", zassenhaus(n, Side::Left, ExpMode::Plain)},
      {"right", zassenhaus(n, Side::Right, ExpMode::Plain)},
      {"accel-left", zassenhaus(n, Side::Left, ExpMode::Accelerated)},
      {"accel-right", zassenhaus(n, Side::Right, ExpMode::Accelerated)},
      {"dynkin", dynkin(n)},
  };
  bool known = opt.series == "all";
  for (const auto& [name, elems] : all) known = known || name == opt.series;
  if (!known) throw InvalidArgument("unknown series '" + opt.series + "'");
  const ChangeOfBasis table = change_of_basis(n);

  if (opt.format != "json") {
    std::ostringstream os;
    for (const auto& [name, elems] : all) {
      if (opt.series != "all" && opt.series != name) continue;
      os << "# " << name << '\n';
      for (int k = 1; k <= n; ++k) os << k << ": " << elems[static_cast<std::size_t>(k - 1)].to_string() << '\n';
    }
    if (opt.series == "all" || opt.series == "dynkin") {
      os << "# dynkin in right words\n";
      for (int k = 1; k <= n; ++k) os << k << ": " << words_string(table.dynkin_in_right_zassenhaus[static_cast<std::size_t>(k - 1)]) << '\n';
      os << "# left in dynkin words\n";
      for (int k = 1; k <= n; ++k) os << k << ": " << words_string(table.left_zassenhaus_in_dynkin[static_cast<std::size_t>(k - 1)]) << '\n';
    }
    emit(opt, os.str());
    return 0;
  }
  Json j;
  j["degree"] = n;
  Json series = Json::object();
  for (const auto& [name, elems] : all) {
    if (opt.series != "all" && opt.series != name) continue;
    Json list = Json::array();
    for (int k = 1; k <= n; ++k) list.push_back(descent_to_json(elems[static_cast<std::size_t>(k - 1)], k));
    series[name] = std::move(list);
  }
  j["series"] = std::move(series);
  if (opt.series == "all" || opt.series == "dynkin") {
    Json cob = Json::array();
    for (int k = 1; k <= n; ++k) {
      DescentElement a;
      for (const auto& [c, x] : table.dynkin_in_right_zassenhaus[static_cast<std::size_t>(k - 1)]) a.add(c, x);
      cob.push_back(descent_to_json(a, k));
    }
    j["dynkin_in_right_words"] = std::move(cob);
  }
  emit(opt, j.dump(2) + "\n");
  return 0;
}

int cmd_verify(const Options& opt) {
  std::vector<std::string> names;
  if (opt.suite == "all") {
    names = suite_names();
  } else {
    names.push_back(opt.suite);
  }
  for (const auto& name : names) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
      throw InvalidArgument("unknown suite '" + name + "'");
    }
  }
  SuiteConfig config;
  config.degree = opt.degree.value_or(5);
  config.seed = opt.seed;
  bool ok = true;
  std::ostringstream os;
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, config);
    for (const auto& c : r.checks) os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    os << "suite " << name << ": " << (r.passed() ? "pass" : "fail") << '\n';
    std::cerr << "suite " << name << " took " << r.seconds << " s\n";
    ok = ok && r.passed();
  }
  emit(opt, os.str());
  return ok ? 0 : kExitDisagree;
}

int cmd_beta(const Options& opt) {
  const Character phi = load_character(opt);
  const BetaReport b = beta(phi);
  const bool ok = b.expansion_agrees && b.antipode_relation_holds;
  if (opt.format == "table") {
    std::ostringstream os;
    for (std::size_t k = 0; k < b.via_dynkin.size(); ++k) {
      os << character_table("beta_" + std::to_string(k + 1), b.via_dynkin[k].map());
    }
    os << "expansion agrees: " << (b.expansion_agrees ? "true" : "false") << '\n';
    os << "antipode relation: " << (b.antipode_relation_holds ? "true" : "false") << '\n';
    emit(opt, os.str());
  } else {
    Json j;
    Json comps = Json::array();
    for (std::size_t k = 0; k < b.via_dynkin.size(); ++k) {
      comps.push_back(Json{{"degree", k + 1}, {"value", linmap_to_json(b.via_dynkin[k].map())}});
    }
    j["beta"] = std::move(comps);
    j["expansion_agrees"] = b.expansion_agrees;
    j["antipode_relation_holds"] = b.antipode_relation_holds;
    emit(opt, j.dump(2) + "\n");
  }
  return ok ? 0 : kExitDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Birkhoff decomposition of characters on rooted-tree Hopf algebras"};
  app.require_subcommand(1);
  Options opt;

  auto* decompose = app.add_subcommand("decompose", "Bogoliubov and exponential decompositions of a character");
  decompose->add_option("--input,-i", opt.input, "character JSON")->required();
  decompose->add_option("--degree,-N", opt.degree, "truncation (defaults to the file's)");
  decompose->add_option("--method", opt.method)->check(CLI::IsMember({"bogoliubov", "zassenhaus", "accelerated", "all"}));

  auto* idempotents = app.add_subcommand("idempotents", "Zassenhaus and Dynkin elements in the composition basis");
  idempotents->add_option("--degree,-N", opt.degree, "largest weight");
  idempotents->add_option("--series", opt.series, "left, right, accel-left, accel-right, dynkin or all");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", opt.suite, "rota-baxter, hopf-axioms, theorem, zassenhaus, beta or all")->required();
  verify->add_option("--degree,-N", opt.degree, "truncation degree");
  verify->add_option("--seed", opt.seed);

  auto* beta_cmd = app.add_subcommand("beta", "Graded components of the beta function");
  beta_cmd->add_option("--input,-i", opt.input, "character JSON")->required();
  beta_cmd->add_option("--degree,-N", opt.degree, "truncation (defaults to the file's)");

  for (auto* sub : {decompose, idempotents, beta_cmd}) {
    sub->add_option("--format", opt.format)->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--output,-o", opt.output);
  }
  verify->add_option("--output,-o", opt.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*decompose) return cmd_decompose(opt);
    if (*idempotents) return cmd_idempotents(opt);
    if (*verify) return cmd_verify(opt);
    if (*beta_cmd) return cmd_beta(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FloorExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const DegreeTooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
