#pragma once

// Residues modulo 2^k: the finite-precision view of 2-adic integers that a
// k-bit register actually holds.

#include <bit>
#include <cstdint>
#include <string>

#include "tfa/errors.hpp"

namespace tfa {

inline constexpr unsigned kMaxBits = 64;

/// 2^bits - 1, valid for bits in [0, 64].
constexpr std::uint64_t low_mask(unsigned bits) noexcept {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

/// Bit length of m minus one, with floor_log2(0) == 0.
constexpr unsigned floor_log2(std::uint64_t m) noexcept {
  return m == 0 ? 0u : static_cast<unsigned>(std::bit_width(m)) - 1u;
}

/// Inverse of an odd residue modulo 2^64 by Newton iteration
/// (each step doubles the number of correct low bits).
constexpr std::uint64_t inverse_odd_u64(std::uint64_t a) noexcept {
  std::uint64_t y = a;  // a*a == 1 mod 8, so 3 bits are right to start
  for (int i = 0; i < 5; ++i) y *= 2 - a * y;
  return y;
}

/// 2-adic valuation of a residue. A zero residue at precision k has
/// valuation at least k; finite precision cannot say more.
struct Valuation {
  unsigned ord = 0;
  bool at_least = false;  // true only for the zero residue

  friend bool operator==(const Valuation&, const Valuation&) = default;
  std::string to_string() const;
};

/// An element of Z/2^k Z together with its precision k (1 <= k <= 64).
class Word {
 public:
  /// Reduces `value` modulo 2^bits.
  Word(std::uint64_t value, unsigned bits);

  std::uint64_t value() const noexcept { return value_; }
  unsigned bits() const noexcept { return bits_; }
  std::uint64_t mask() const noexcept { return low_mask(bits_); }

  /// The residue modulo 2^s, s <= bits().
  Word reduce(unsigned s) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::uint64_t value_;
  unsigned bits_;
};

Word operator+(Word a, Word b);
Word operator-(Word a, Word b);
Word operator*(Word a, Word b);
Word operator&(Word a, Word b);
Word operator|(Word a, Word b);
Word operator^(Word a, Word b);
Word operator~(Word a);
Word operator-(Word a);

/// Multiplicative inverse of an odd residue; throws DomainError on even input.
Word inv_odd(Word a);

/// a << s; requires s < a.bits().
Word shl(Word a, unsigned s);

/// mask(x, c) = x AND c.
Word mask(Word x, std::uint64_t c);

/// The i-th base-2 digit of x; requires i < x.bits().
unsigned delta(unsigned i, Word x);

Valuation ord2(Word a);

/// a == b (mod 2^s), i.e. the low s bits agree.
bool congruent(Word a, Word b, unsigned s);

}  // namespace tfa
