#include "tfa/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <vector>

namespace tfa {
namespace {

void require_cap(unsigned bits, unsigned cap) {
  if (bits == 0 || bits > cap || bits > kMaxBits) {
    throw CapExceeded("exhaustive check at k = " + std::to_string(bits) +
                      " exceeds the cap of " + std::to_string(cap) + " bits");
  }
}

// Marks images over disjoint input ranges on all hardware threads; returns
// true when some image was hit twice.
bool has_collision_parallel(const WordFunction& f, unsigned bits) {
  const std::uint64_t n = std::uint64_t{1} << bits;
  const std::uint64_t m = low_mask(bits);
  std::vector<std::atomic<std::uint64_t>> seen((n + 63) / 64);
  std::atomic<bool> collision{false};
  const unsigned workers =
      bits < 16 ? 1u : std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t x = lo; x < hi && !collision.load(std::memory_order_relaxed); ++x) {
      const std::uint64_t y = f(x) & m;
      const std::uint64_t bit = std::uint64_t{1} << (y & 63);
      if (seen[y >> 6].fetch_or(bit, std::memory_order_relaxed) & bit) {
        collision.store(true, std::memory_order_relaxed);
      }
    }
  };
  if (workers == 1) {
    scan(0, n);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = w * chunk;
      pool.emplace_back(scan, lo, std::min(n, lo + chunk));
    }
  }
  return collision.load();
}

std::pair<std::uint64_t, std::uint64_t> first_collision(const WordFunction& f, unsigned bits) {
  const std::uint64_t n = std::uint64_t{1} << bits;
  const std::uint64_t m = low_mask(bits);
  std::vector<std::uint64_t> image(n);
  std::vector<bool> seen(n, false);
  for (std::uint64_t x = 0; x < n; ++x) {
    const std::uint64_t y = f(x) & m;
    image[x] = y;
    if (seen[y]) {
      const auto first = std::find(image.begin(), image.begin() + static_cast<std::ptrdiff_t>(x), y);
      return {static_cast<std::uint64_t>(first - image.begin()), x};
    }
    seen[y] = true;
  }
  return {0, 0};
}

}  // namespace

OracleResult bijective_mod(const WordFunction& f, unsigned bits, unsigned cap) {
  require_cap(bits, cap);
  OracleResult r;
  r.modulus_bits = bits;
  r.bijective = !has_collision_parallel(f, bits);
  if (!r.bijective) r.collision = first_collision(f, bits);
  return r;
}

OracleResult transitive_mod(const WordFunction& f, unsigned bits, unsigned cap) {
  require_cap(bits, cap);
  const std::uint64_t n = std::uint64_t{1} << bits;
  const std::uint64_t m = low_mask(bits);
  std::uint64_t x = 0;
  std::uint64_t steps = 0;
  std::optional<std::uint64_t> cycle;
  while (steps < n) {
    x = f(x) & m;
    ++steps;
    if (x == 0) {
      cycle = steps;
      break;
    }
  }
  OracleResult r;
  r.modulus_bits = bits;
  r.cycle_length = cycle;
  r.transitive = cycle && *cycle == n;
  if (r.transitive) {
    r.bijective = true;
  } else {
    const OracleResult b = bijective_mod(f, bits, cap);
    r.bijective = b.bijective;
    r.collision = b.collision;
  }
  return r;
}

bool balanced_mod(const BivariateFunction& f, unsigned bits, unsigned cap) {
  require_cap(bits, cap);
  const std::uint64_t n = std::uint64_t{1} << bits;
  const std::uint64_t m = low_mask(bits);
  std::vector<std::uint64_t> count(n, 0);
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y) ++count[f(x, y) & m];
  }
  return std::all_of(count.begin(), count.end(), [n](std::uint64_t c) { return c == n; });
}

}  // namespace tfa
