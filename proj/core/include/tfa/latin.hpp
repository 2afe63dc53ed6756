#pragma once

// Latin squares of order 2^l from two measure-preserving van der Put tables:
// entry(a, b) = tx(a) + ty(b) mod 2^l.

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "tfa/vdp.hpp"

namespace tfa {

inline constexpr unsigned kMaxLatinVerifyBits = 12;

struct LatinSquareSpec {
  unsigned bits = 0;
  VdpTable tx;
  VdpTable ty;
};

/// Throws DomainError unless both tables have `bits` bits and are
/// measure-preserving.
LatinSquareSpec make_latin_spec(VdpTable tx, VdpTable ty);

/// Random measure-preserving pair: b_0 + b_1 odd, b_m odd for m >= 2,
/// B_m = 2^floor(log m) b_m, drawn from std::mt19937_64 seeded with `seed`.
LatinSquareSpec random_latin_spec(unsigned bits, std::uint64_t seed);

/// Throws DomainError if a or b is out of range.
std::uint64_t latin_entry(const LatinSquareSpec& s, std::uint64_t a, std::uint64_t b);
std::uint64_t latin_entry(const LatinSquareSpec& s, std::uint64_t a, std::uint64_t b,
                          EvalCounters& counters);

struct LatinViolation {
  bool in_row = false;  // true: row `line` repeats a symbol; false: column `line`
  std::uint64_t line = 0;
  std::uint64_t first = 0;  // the two positions along the line holding equal symbols
  std::uint64_t second = 0;
};

/// Exhaustive row and column check. Throws CapExceeded above `cap` bits.
std::optional<LatinViolation> verify_latin(const LatinSquareSpec& s,
                                           unsigned cap = kMaxLatinVerifyBits);

std::vector<std::uint64_t> latin_matrix(const LatinSquareSpec& s);
void write_latin_csv(std::ostream& out, const LatinSquareSpec& s);

}  // namespace tfa
