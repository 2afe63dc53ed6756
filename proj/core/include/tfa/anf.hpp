#pragma once

// Coordinate Boolean functions psi_j (output bit j as a function of input
// bits 0..j) and the classical bit-slice criteria on them.

#include <cstdint>
#include <vector>

#include "tfa/function.hpp"
#include "tfa/report.hpp"

namespace tfa {

inline constexpr unsigned kMaxAnfBits = 22;

/// Truth table of psi_j: truth[x] is bit j of f(x), x < 2^(j+1).
struct CoordinateTable {
  unsigned j = 0;
  std::vector<bool> truth;

  /// Weight of phi_j, the restriction of psi_j to chi_j = 0.
  std::uint64_t phi_weight() const;
};

CoordinateTable coordinate(const WordFunction& f, unsigned j);

/// Bijective mod 2^k iff every psi_j, j < k, is linear in chi_j:
/// psi_j(p, 1) = psi_j(p, 0) xor 1 for every prefix p.
CriteriaReport check_measure_preservation_anf(const WordFunction& f, unsigned bits);

/// Transitive mod 2^k iff additionally psi_0 = chi_0 xor 1 and phi_j has
/// odd weight for 1 <= j < k.
CriteriaReport check_ergodicity_anf(const WordFunction& f, unsigned bits);

}  // namespace tfa
