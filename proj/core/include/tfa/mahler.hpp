#pragma once

// Mahler coefficients a_i = (Delta^i f)(0) of a word function and the
// necessary conditions they must satisfy. Only finitely many coefficients
// are known, so these checks can refute a property but never confirm it.

#include <cstdint>
#include <vector>

#include "tfa/function.hpp"
#include "tfa/report.hpp"

namespace tfa {

inline constexpr std::uint64_t kMaxMahlerPoints = std::uint64_t{1} << 12;

struct MahlerPrefix {
  unsigned bits = 0;
  std::vector<std::uint64_t> a;  // a_0 .. a_{N-1}, mod 2^bits
};

/// Forward-difference table over f(0), ..., f(points - 1); O(points^2).
MahlerPrefix mahler_prefix(const WordFunction& f, unsigned bits, std::uint64_t points);

/// sum_i a_i binom(x, i) mod 2^bits for x < points, with binomials taken
/// from Pascal's triangle row by row.
std::vector<std::uint64_t> mahler_interpolate(const MahlerPrefix& p, std::uint64_t points);

/// 2^floor(log2 i) | a_i for i >= 2.
CriteriaReport check_compatibility_mahler(const MahlerPrefix& p);

/// a_1 odd and 2^(floor(log2 i) + 1) | a_i for i >= 2.
CriteriaReport check_measure_preservation_mahler(const MahlerPrefix& p);

/// a_0 odd, a_1 == 1 (mod 4) and 2^(floor(log2(i + 1)) + 1) | a_i for i >= 2.
CriteriaReport check_ergodicity_mahler(const MahlerPrefix& p);

}  // namespace tfa
