#pragma once

#include <string>
#include <string_view>
#include <utility>

namespace renorm {

/// Plain factors are homogeneous of one degree; accelerated factors cover the
/// dyadic blocks [2^(m-1), 2^m - 1].
enum class ExpMode { Plain, Accelerated };

/// Left series: Id = exp(Z_1) * exp(Z_2) * ...; right series: Id = ... * exp(Z~_2) * exp(Z~_1).
enum class Side { Left, Right };

std::string to_string(ExpMode mode);
std::string to_string(Side side);

/// Degrees covered by accelerated block m >= 1, capped at `truncation`.
inline std::pair<int, int> accelerated_block(int m, int truncation) {
  const int lo = 1 << (m - 1);
  const int hi = (1 << m) - 1;
  return {lo, hi < truncation ? hi : truncation};
}

}  // namespace renorm
