#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "tfa/word.hpp"

namespace tfa {

/// A map on k-bit words, given as residues in [0, 2^k). Every analysis in
/// the library consumes functions in this form together with k.
using WordFunction = std::function<std::uint64_t(std::uint64_t)>;

/// f(0), f(1), ..., f(2^bits - 1), each reduced mod 2^bits.
inline std::vector<std::uint64_t> tabulate(const WordFunction& f, unsigned bits) {
  const std::uint64_t n = std::uint64_t{1} << bits;
  const std::uint64_t m = low_mask(bits);
  std::vector<std::uint64_t> values(n);
  for (std::uint64_t x = 0; x < n; ++x) values[x] = f(x) & m;
  return values;
}

/// Lookup over a value table. When the table was produced at a higher
/// precision than `bits`, lookups reduce both input and output, which is
/// exact for T-functions.
inline WordFunction from_values(std::shared_ptr<const std::vector<std::uint64_t>> values,
                                unsigned bits) {
  const std::uint64_t m = low_mask(bits);
  return [values = std::move(values), m](std::uint64_t x) { return (*values)[x & m] & m; };
}

inline WordFunction from_values(std::vector<std::uint64_t> values, unsigned bits) {
  return from_values(std::make_shared<const std::vector<std::uint64_t>>(std::move(values)),
                     bits);
}

}  // namespace tfa
