#include "tfa/word.hpp"

#include <string>

namespace tfa {
namespace {

void require_same_precision(const Word& a, const Word& b) {
  if (a.bits() != b.bits()) {
    throw PrecisionMismatch("precision mismatch: " + std::to_string(a.bits()) +
                            " vs " + std::to_string(b.bits()) + " bits");
  }
}

}  // namespace

std::string Valuation::to_string() const {
  return (at_least ? ">=" : "") + std::to_string(ord);
}

Word::Word(std::uint64_t value, unsigned bits) : value_(0), bits_(bits) {
  if (bits == 0 || bits > kMaxBits) {
    throw DomainError("precision must be in [1, 64], got " + std::to_string(bits));
  }
  value_ = value & low_mask(bits);
}

Word Word::reduce(unsigned s) const {
  if (s > bits_) throw DomainError("cannot reduce to a higher precision");
  return Word(value_, s);
}

Word operator+(Word a, Word b) {
  require_same_precision(a, b);
  return Word(a.value() + b.value(), a.bits());
}

Word operator-(Word a, Word b) {
  require_same_precision(a, b);
  return Word(a.value() - b.value(), a.bits());
}

Word operator*(Word a, Word b) {
  require_same_precision(a, b);
  return Word(a.value() * b.value(), a.bits());
}

Word operator&(Word a, Word b) {
  require_same_precision(a, b);
  return Word(a.value() & b.value(), a.bits());
}

Word operator|(Word a, Word b) {
  require_same_precision(a, b);
  return Word(a.value() | b.value(), a.bits());
}

Word operator^(Word a, Word b) {
  require_same_precision(a, b);
  return Word(a.value() ^ b.value(), a.bits());
}

Word operator~(Word a) { return Word(~a.value(), a.bits()); }

Word operator-(Word a) { return Word(0 - a.value(), a.bits()); }

Word inv_odd(Word a) {
  if ((a.value() & 1) == 0) {
    throw DomainError("inv_odd: " + std::to_string(a.value()) + " is even");
  }
  return Word(inverse_odd_u64(a.value()), a.bits());
}

Word shl(Word a, unsigned s) {
  if (s >= a.bits()) throw DomainError("shift amount out of range");
  return Word(a.value() << s, a.bits());
}

Word mask(Word x, std::uint64_t c) { return Word(x.value() & c, x.bits()); }

unsigned delta(unsigned i, Word x) {
  if (i >= x.bits()) {
    throw DomainError("bit index " + std::to_string(i) + " out of range");
  }
  return static_cast<unsigned>((x.value() >> i) & 1);
}

Valuation ord2(Word a) {
  if (a.value() == 0) return {a.bits(), true};
  return {static_cast<unsigned>(std::countr_zero(a.value())), false};
}

bool congruent(Word a, Word b, unsigned s) {
  require_same_precision(a, b);
  return ((a.value() ^ b.value()) & low_mask(s)) == 0;
}

}  // namespace tfa
