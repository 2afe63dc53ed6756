#include "tfa/latin.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <string>
#include <thread>

namespace tfa {
namespace {

void require_in_range(const LatinSquareSpec& s, std::uint64_t a, std::uint64_t b) {
  const std::uint64_t n = std::uint64_t{1} << s.bits;
  if (a >= n || b >= n) {
    throw DomainError("latin entry (" + std::to_string(a) + ", " + std::to_string(b) +
                      ") out of range for order " + std::to_string(n));
  }
}

// Scans line `line` of the square; returns the first repeated symbol's
// positions.
std::optional<LatinViolation> check_line(const LatinSquareSpec& s, bool row, std::uint64_t line,
                                         std::vector<std::int64_t>& where) {
  const std::uint64_t n = std::uint64_t{1} << s.bits;
  std::fill(where.begin(), where.end(), -1);
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t v = row ? latin_entry(s, line, i) : latin_entry(s, i, line);
    if (where[v] >= 0) {
      return LatinViolation{row, line, static_cast<std::uint64_t>(where[v]), i};
    }
    where[v] = static_cast<std::int64_t>(i);
  }
  return std::nullopt;
}

}  // namespace

LatinSquareSpec make_latin_spec(VdpTable tx, VdpTable ty) {
  if (tx.bits() != ty.bits()) throw PrecisionMismatch("latin tables differ in precision");
  for (const VdpTable* t : {&tx, &ty}) {
    if (check_measure_preservation(*t).measure_preserving != Verdict::pass) {
      throw DomainError("latin tables must be measure-preserving");
    }
  }
  const unsigned bits = tx.bits();
  return LatinSquareSpec{bits, std::move(tx), std::move(ty)};
}

LatinSquareSpec random_latin_spec(unsigned bits, std::uint64_t seed) {
  if (bits == 0 || bits > kMaxTableBits) throw DomainError("latin order out of range");
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = low_mask(bits);
  auto draw = [&] {
    const std::uint64_t n = std::uint64_t{1} << bits;
    std::vector<std::uint64_t> c(n);
    c[0] = rng() & mask;
    if (n > 1) c[1] = (rng() & mask & ~std::uint64_t{1}) | ((c[0] & 1) ^ 1);
    for (std::uint64_t m = 2; m < n; ++m) {
      const unsigned level = floor_log2(m);
      c[m] = ((rng() | 1) << level) & mask;
    }
    return VdpTable(bits, std::move(c));
  };
  VdpTable tx = draw();
  VdpTable ty = draw();
  return LatinSquareSpec{bits, std::move(tx), std::move(ty)};
}

std::uint64_t latin_entry(const LatinSquareSpec& s, std::uint64_t a, std::uint64_t b) {
  require_in_range(s, a, b);
  return (s.tx.evaluate(a) + s.ty.evaluate(b)) & low_mask(s.bits);
}

std::uint64_t latin_entry(const LatinSquareSpec& s, std::uint64_t a, std::uint64_t b,
                          EvalCounters& counters) {
  require_in_range(s, a, b);
  const std::uint64_t v = s.tx.evaluate(a, counters) + s.ty.evaluate(b, counters);
  ++counters.adds;
  return v & low_mask(s.bits);
}

std::optional<LatinViolation> verify_latin(const LatinSquareSpec& s, unsigned cap) {
  if (s.bits > cap) {
    throw CapExceeded("latin verification at l = " + std::to_string(s.bits) +
                      " exceeds the cap of " + std::to_string(cap) + " bits");
  }
  const std::uint64_t n = std::uint64_t{1} << s.bits;
  const unsigned workers = s.bits < 8 ? 1u : std::max(1u, std::thread::hardware_concurrency());
  // Lines are numbered rows first, then columns; the lowest violating line wins.
  std::atomic<std::uint64_t> next{0};
  std::mutex guard;
  std::optional<std::pair<std::uint64_t, LatinViolation>> found;
  auto work = [&] {
    std::vector<std::int64_t> where(n);
    for (std::uint64_t line = next++; line < 2 * n; line = next++) {
      {
        std::lock_guard lock(guard);
        if (found && found->first < line) return;
      }
      const bool row = line < n;
      if (auto v = check_line(s, row, row ? line : line - n, where)) {
        std::lock_guard lock(guard);
        if (!found || line < found->first) found.emplace(line, *v);
        return;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (!found) return std::nullopt;
  return found->second;
}

std::vector<std::uint64_t> latin_matrix(const LatinSquareSpec& s) {
  const std::uint64_t n = std::uint64_t{1} << s.bits;
  std::vector<std::uint64_t> row_part(n);
  std::vector<std::uint64_t> col_part(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    row_part[i] = s.tx.evaluate(i);
    col_part[i] = s.ty.evaluate(i);
  }
  std::vector<std::uint64_t> out(n * n);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      out[a * n + b] = (row_part[a] + col_part[b]) & low_mask(s.bits);
    }
  }
  return out;
}

void write_latin_csv(std::ostream& out, const LatinSquareSpec& s) {
  const std::uint64_t n = std::uint64_t{1} << s.bits;
  const auto m = latin_matrix(s);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      if (b) out << ',';
      out << m[a * n + b];
    }
    out << '\n';
  }
}

}  // namespace tfa
