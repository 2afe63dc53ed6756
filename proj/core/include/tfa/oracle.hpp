#pragma once

// Brute-force ground truth: bijectivity by marking every image, transitivity
// by walking the orbit of 0.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "tfa/function.hpp"

namespace tfa {

inline constexpr unsigned kMaxOracleBits = 24;
inline constexpr unsigned kMaxBalancedBits = 12;

struct OracleResult {
  unsigned modulus_bits = 0;
  bool bijective = false;
  bool transitive = false;
  /// First colliding pair (x < y, f(x) == f(y)) when not bijective.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> collision;
  /// Length of the cycle through 0, when 0 lies on a cycle.
  std::optional<std::uint64_t> cycle_length;
};

OracleResult bijective_mod(const WordFunction& f, unsigned bits, unsigned cap = kMaxOracleBits);

/// Also fills `bijective` (and its witness) so that every false verdict
/// carries evidence.
OracleResult transitive_mod(const WordFunction& f, unsigned bits, unsigned cap = kMaxOracleBits);

using BivariateFunction = std::function<std::uint64_t(std::uint64_t, std::uint64_t)>;

/// Every residue is hit exactly 2^k times over all 2^(2k) argument pairs.
bool balanced_mod(const BivariateFunction& f, unsigned bits, unsigned cap = kMaxBalancedBits);

}  // namespace tfa
