#pragma once

// Van der Put coefficients of T-functions on k-bit words, the table-driven
// ("knapsack") evaluator, and the coefficient criteria for compatibility,
// bijectivity and single-cycle transitivity.

#include <cstdint>
#include <span>
#include <vector>

#include "tfa/function.hpp"
#include "tfa/report.hpp"
#include "tfa/word.hpp"

namespace tfa {

/// Largest precision for which a full 2^k coefficient table is built.
inline constexpr unsigned kMaxTableBits = 24;

/// Instruction counts of one table evaluation.
struct EvalCounters {
  std::uint64_t loads = 0;
  std::uint64_t adds = 0;
  std::uint64_t masks = 0;
  std::uint64_t compares = 0;

  std::uint64_t arithmetic() const noexcept { return adds + masks + compares; }
  EvalCounters& operator+=(const EvalCounters& o) noexcept;
};

/// chi(m, x) = 1 iff x == m (mod 2^(floor(log2 m) + 1)); for m = 0 the
/// ball is the even numbers. Requires m < 2^x.bits().
unsigned chi(std::uint64_t m, Word x);

/// The coefficients B_0 .. B_{2^k - 1} (mod 2^k) of f mod 2^k, so that
/// f(x) = sum_m B_m chi(m, x) (mod 2^k).
class VdpTable {
 public:
  /// Takes 2^bits coefficients; entries are reduced mod 2^bits.
  VdpTable(unsigned bits, std::vector<std::uint64_t> coeffs);

  static VdpTable from_function(const WordFunction& f, unsigned bits);
  /// From f(0), ..., f(2^bits - 1).
  static VdpTable from_values(std::span<const std::uint64_t> values, unsigned bits);

  unsigned bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const std::uint64_t> coeffs() const noexcept { return coeffs_; }
  std::uint64_t operator[](std::uint64_t m) const { return coeffs_[m]; }

  /// b_m = B_m / 2^floor(log2 m), known mod 2^(bits - floor(log2 m)).
  /// Meaningful for compatible tables.
  std::uint64_t reduced(std::uint64_t m) const;

  /// f(x) mod 2^k as the sum of B_{x mod 2^i} over the set bits of x:
  /// at most k loads and k - 1 additions.
  std::uint64_t evaluate(std::uint64_t x) const noexcept;
  std::uint64_t evaluate(std::uint64_t x, EvalCounters& counters) const noexcept;
  Word evaluate(Word x) const;

  WordFunction as_function() const;

  friend bool operator==(const VdpTable&, const VdpTable&) = default;

 private:
  unsigned bits_;
  std::vector<std::uint64_t> coeffs_;
};

VdpTable coefficients_from_function(const WordFunction& f, unsigned bits);

/// ord2(B_m) >= floor(log2 m) for every m; a zero residue passes.
CriteriaReport check_compatibility(const VdpTable& t);

/// B_0 + B_1 odd and ord2(B_m) == floor(log2 m) for m >= 2. Certifies that
/// f mod 2^k is a bijection. Runs the compatibility check first.
CriteriaReport check_measure_preservation(const VdpTable& t);

/// Conditions on the reduced coefficients b_m:
///   (i) b_0 odd, (ii) b_0 + b_1 == 3 (mod 4), (iii) b_m odd for m >= 2,
///   (iv) b_2 + b_3 == 2 (mod 4), (v) level sums == 0 (mod 4) for
///   3 <= n <= k - 1.
/// A table known mod 2^k decides transitivity of f mod 2^k exactly with
/// these levels; the level-k sum is reported undecidable. Requires k >= 3.
CriteriaReport check_ergodicity(const VdpTable& t);

/// The same decision through the ball-sum form: B_0 odd, B_0 + B_1 == 3
/// (mod 4), exact valuations below the last index of each level, and
/// sum over the level of (B_m - 2^(n-1)) == 0 (mod 2^(n+1)) for
/// 2 <= n <= k - 1; taken together with bijectivity.
bool ergodic_by_level_sums(const VdpTable& t);

/// a_0 .. a_{2^k} parametrising an ergodic table.
struct ASequence {
  unsigned bits = 0;
  std::vector<std::uint64_t> a;
};

/// B_0 = 1 + 2(a_1 - a_0), B_1 = 2(1 + a_0 + 2a_2 - a_1),
/// B_m = 2^(n-1) + 2^n (a_{m+1} - a_m) inside level n, and
/// B_{2^n - 1} = 2^(n-1) + 2^(n+1) a_{2^n} - 2^n (a_{2^n - 1} + a_{2^(n-1)}).
VdpTable table_from_asequence(const ASequence& s);

/// Inverse of table_from_asequence with a_0 = 0. Throws NotErgodic.
ASequence asequence_from_table(const VdpTable& t);

}  // namespace tfa
