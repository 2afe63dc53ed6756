#pragma once

// Named T-function families with known bijectivity/transitivity behaviour.
// They form the golden corpus that every criterion is checked against.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tfa/expr.hpp"

namespace tfa {

struct Prediction {
  std::optional<bool> measure_preserving;
  std::optional<bool> ergodic;
};

struct GalleryEntry {
  std::string name;
  std::string parameters;
  Expr expr;
  /// Predicted behaviour of expr mod 2^k; nullopt where the law says nothing.
  std::function<std::optional<Prediction>(unsigned bits)> predict;
  /// The law the prediction comes from, printed when a check disagrees.
  std::string claim;
};

/// x + (x^2 OR C): transitive mod 2^n (n >= 3) iff C == 5 or 7 (mod 8).
GalleryEntry klimov_shamir(std::uint64_t c);

/// (...((x + c_0) ^ d_0) + c_1) ^ d_1 ...: transitive mod 2^n for n >= 2
/// iff transitive mod 4.
GalleryEntry add_xor(std::span<const std::uint64_t> c, std::span<const std::uint64_t> d);
bool add_xor_transitive_mod4(std::span<const std::uint64_t> c, std::span<const std::uint64_t> d);

/// c + sum_i d_i * mask(x, 2^i) over the given d_i; max precision d.size().
/// Ergodic iff c odd, d_0 == 1 (mod 4) and d_i odd for i >= 1.
GalleryEntry masked_sum(std::uint64_t c, std::span<const std::uint64_t> d);

/// 1 + bit(x,0) + 6 bit(x,1) + sum_{2 <= j < bits} (1 + 2(x mod 2^j)) 2^j bit(x,j).
/// Terms with j >= bits vanish mod 2^bits, so the truncation is exact.
GalleryEntry prefix_weighted_mask(unsigned bits);
std::uint64_t prefix_weighted_mask_direct(std::uint64_t x, unsigned bits);

/// {d + x + 2g(x), 1 + x + 2(g(x + 1) - g(x))}: bijective, resp. ergodic,
/// for every T-function g.
std::vector<GalleryEntry> delta_constructors(const Expr& g, std::uint64_t d);

/// f(x + 4g(x)), f(x ^ 4g(x)), f(x) + 4g(x), f(x) ^ 4g(x): ergodic
/// whenever f is.
std::vector<GalleryEntry> comp_bool_constructors(const Expr& f_ergodic, const Expr& g);

using GalleryParams = std::map<std::string, std::string>;

struct GalleryFamily {
  std::string name;
  std::string usage;
  std::string claim;
  std::function<std::vector<GalleryEntry>(const GalleryParams&, unsigned bits)> build;
};

const std::vector<GalleryFamily>& gallery_families();
const GalleryFamily& gallery_family(const std::string& name);

/// Representative members of every family, valid up to `bits`.
std::vector<GalleryEntry> default_gallery(unsigned bits);

}  // namespace tfa
