#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "renorm/linmap.hpp"
#include "renorm/modes.hpp"

namespace renorm {

/// Output of the Bogoliubov recursion phi_bar = phi_- * (phi - e), phi_pm = e pm R_pm(phi_bar).
struct BirkhoffPair {
  Character phi_minus;  ///< counterterm, strictly polar on H+
  Character phi_plus;   ///< renormalized character, holomorphic
  LinMap phi_bar;       ///< preparation map; not a character in general
};

/// Solves the recursion degree by degree; phi_bar at degree n only uses phi_- below n.
BirkhoffPair bogoliubov_decompose(const Character& phi);

/// Degree-n component of an n-connected character, as an infinitesimal character.
/// Throws NotConnected when phi is not n-connected.
InfChar zeta_extract(const Character& phi, int n);

/// Degrees [2^(m-1), 2^m - 1] of a 2^(m-1)-connected character (m >= 1).
/// Throws NotConnected when phi is not 2^(m-1)-connected.
InfChar mu_extract(const Character& phi, int m);

/// phi = exp(l_1-) * ... * exp(l_k-) * exp(l_k+) * ... * exp(l_1+) at truncation N.
///
/// `minus` holds the factors standing left of phi (they build phi_-^{-1} read left
/// to right), `plus` the factors on its right (phi_+ read right to left).
/// `residuals[k]` is phi with the first k levels stripped from both sides;
/// residuals[0] = phi and the last residual is the unit.
struct ExpFactorization {
  ExpMode mode = ExpMode::Plain;
  std::vector<InfChar> minus;
  std::vector<InfChar> plus;
  std::vector<Character> residuals;

  int levels() const { return static_cast<int>(minus.size()); }
  /// Degrees covered by level k (1-based).
  std::pair<int, int> level_degrees(int k, int truncation) const;
  /// Factor of level k, or zero past the last level.
  InfChar minus_factor(int k, const BasisPtr& basis) const;
  InfChar plus_factor(int k, const BasisPtr& basis) const;
};

/// Runs levels until the stripped character is (N+1)-connected.
ExpFactorization exp_factorize(const Character& phi, ExpMode mode);

struct AssembledPair {
  Character phi_minus_inv;
  Character phi_plus;
};

/// Left-to-right product of exp(minus factors), right-to-left product of exp(plus factors).
AssembledPair assemble(const ExpFactorization& fact, const BasisPtr& basis);

/// Result of comparing the three decompositions of one character.
struct TheoremReport {
  BirkhoffPair bogoliubov;
  ExpFactorization plain;
  ExpFactorization accelerated;
  Character plain_minus;
  Character plain_plus;
  Character accelerated_minus;
  Character accelerated_plus;
  bool agreement = false;
  /// Code of the first basis forest where some pair differs.
  std::optional<std::string> first_mismatch;
};

TheoremReport verify_theorem(const Character& phi);

/// Checks phi_- = e - R-(phi_- * (phi - e)) and phi_+ = e + R+(phi_- * (phi - e)) on every basis forest.
bool bogoliubov_fixed_point_holds(const Character& phi, const Character& phi_minus, const Character& phi_plus);

/// phi_- values strictly polar and phi_+ values holomorphic on every forest of positive degree.
bool polarity_holds(const Character& phi_minus, const Character& phi_plus);

struct ZassenhausCounterterm {
  /// phi_-^{-1} o alpha_H(Z_n), n = 1..N.
  std::vector<InfChar> components;
  bool matches_plain = false;
  std::optional<int> first_mismatch_degree;
};

/// Universal left-Zassenhaus splitting of the counterterm, checked against the plain factors l_n-.
ZassenhausCounterterm zassenhaus_counterterm(const Character& phi);

struct BetaReport {
  /// beta_n = phi_- o alpha_H(D_n), n = 1..N.
  std::vector<InfChar> via_dynkin;
  /// sum c_{i1..ik} (phi_- o Z~_i1) * ... * (phi_- o Z~_ik).
  std::vector<LinMap> via_zassenhaus;
  bool expansion_agrees = false;
  /// -phi_- o Z~_n = phi_-^{-1} o Z_n for every n.
  bool antipode_relation_holds = false;
};

BetaReport beta(const Character& phi);

}  // namespace renorm
