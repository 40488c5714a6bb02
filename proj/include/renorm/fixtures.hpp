#pragma once

#include <cstdint>
#include <random>

#include "renorm/linmap.hpp"

namespace renorm {

/// phi(l_n) = 1 / (n! eps^n) on ladders, zero on every other tree.
/// It is exp of the infinitesimal character l_1 -> 1/eps.
Character ladder_exponential(const BasisPtr& basis);

/// phi(l_n) = eps^-n on ladders, zero on every other tree.
Character ladder_power(const BasisPtr& basis);

/// Small random rational: numerator in [-5, 5], denominator in [1, 4].
Rational random_rational(std::mt19937_64& rng);

/// Laurent polynomial with random coefficients on exponents lo..hi and the given cap.
LaurentSeries random_laurent(std::mt19937_64& rng, int lo, int hi, int cap = LaurentSeries::kExact);

/// Character whose value on a tree of degree d is a random Laurent
/// polynomial on exponents -d..d with a nonzero eps^-d term.
Character random_polar_character(const BasisPtr& basis, std::uint64_t seed);

/// Character with random values on exponents 0..d only (no poles).
Character random_holomorphic_character(const BasisPtr& basis, std::uint64_t seed);

}  // namespace renorm
