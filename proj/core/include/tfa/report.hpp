#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tfa {

enum class Family { van_der_put, anf, mahler };

/// Verdict on one property. Truncated families (Mahler) can only refute,
/// so they report `consistent` instead of `pass`.
enum class Verdict { unchecked, pass, fail, consistent };

enum class Outcome { pass, fail, undecidable };

/// One checked condition. For a failure, `index` is the witness (a
/// coefficient index m, a Mahler index i, or a coordinate prefix) and
/// `value` the offending quantity.
struct Evidence {
  std::string condition;
  unsigned level = 0;
  std::uint64_t index = 0;
  Outcome outcome = Outcome::pass;
  std::optional<std::uint64_t> value;
};

struct CriteriaReport {
  Family family = Family::van_der_put;
  unsigned bits = 0;
  Verdict compatible = Verdict::unchecked;
  Verdict measure_preserving = Verdict::unchecked;
  Verdict ergodic = Verdict::unchecked;
  std::vector<Evidence> evidence;
  /// The verdicts speak about f mod 2^certified_up_to.
  unsigned certified_up_to = 0;
  /// Unmet precondition of the requested check, e.g. "not-compatible".
  std::string note;

  /// No positive verdict sits above a failed weaker property
  /// (ergodic => measure-preserving => compatible).
  bool monotone() const;
  const Evidence* first_failure() const;
};

std::string_view to_string(Family f);
std::string_view to_string(Verdict v);
std::string_view to_string(Outcome o);

}  // namespace tfa
