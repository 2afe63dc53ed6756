#include "random_expr.hpp"

#include <cstdio>

#include "tfa/expr.hpp"

namespace tfa::testing {
namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

std::string literal(std::mt19937_64& rng) {
  switch (pick(rng, 0, 5)) {
    case 0: return std::to_string(pick(rng, 0, 15));
    case 1: return std::to_string(pick(rng, 0, 1u << 20));
    case 2: return "(-" + std::to_string(pick(rng, 1, 99)) + ")";
    case 3: return "(" + std::to_string(pick(rng, 0, 50)) + "/" + std::to_string(2 * pick(rng, 0, 20) + 1) + ")";
    case 4: {
      char buf[24];
      std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(rng() >> 16));
      return buf;
    }
    default: return "1";
  }
}

std::string leaf(std::mt19937_64& rng) {
  return pick(rng, 0, 2) == 0 ? literal(rng) : "x";
}

}  // namespace

std::string random_expression(std::mt19937_64& rng, unsigned depth) {
  if (depth == 0) return leaf(rng);
  const auto sub = [&] { return random_expression(rng, depth - 1); };
  switch (pick(rng, 0, 15)) {
    case 0: return "(" + sub() + " + " + sub() + ")";
    case 1: return "(" + sub() + " - " + sub() + ")";
    case 2: return "(" + sub() + " * " + sub() + ")";
    case 3: return "(" + sub() + " & " + sub() + ")";
    case 4: return "(" + sub() + " | " + sub() + ")";
    case 5: return "(" + sub() + " ^ " + sub() + ")";
    case 6: return "(" + sub() + " << " + std::to_string(pick(rng, 0, 5)) + ")";
    case 7: return "~" + sub();
    case 8: return "-" + sub();
    case 9: return "mask(" + sub() + ", " + literal(rng) + ")";
    case 10: {
      // bit(e, i) needs a factor 2^i to stay a T-function.
      const auto i = pick(rng, 0, 4);
      return "(bit(" + sub() + ", " + std::to_string(i) + ") << " + std::to_string(i + pick(rng, 0, 2)) + ")";
    }
    case 11: {
      const auto i = pick(rng, 0, 3);
      return "(" + std::to_string(std::uint64_t{1} << i) + " * bit(" + sub() + ", " + std::to_string(i) + "))";
    }
    case 12: return "mod(" + sub() + ", " + std::to_string(pick(rng, 1, 20)) + ")";
    case 13: return "(" + sub() + " / " + std::to_string(2 * pick(rng, 0, 10) + 1) + ")";
    default: return leaf(rng);
  }
}

std::string random_corpus_expression(std::mt19937_64& rng) {
  const unsigned depth = static_cast<unsigned>(pick(rng, 1, 4));
  const std::string g = random_expression(rng, depth);
  switch (pick(rng, 0, 9)) {
    case 0:
    case 1:
    case 2:
      return g;
    case 3:
    case 4:
      return std::to_string(pick(rng, 0, 9)) + " + x + 2*(" + g + ")";
    case 5:
    case 6: {
      const std::string g1 = Expr::parse(g).compose(Expr::parse("x + 1")).to_string();
      return "1 + x + 2*(" + g1 + " - " + g + ")";
    }
    case 7:
      return "x ^ (" + std::to_string(2 * pick(rng, 1, 4)) + "*(" + g + "))";
    case 8: {
      std::string s = "x";
      const auto rounds = pick(rng, 1, 4);
      for (std::uint64_t i = 0; i < rounds; ++i) {
        s = "((" + s + " + " + std::to_string(pick(rng, 0, 63)) + ") ^ " + std::to_string(pick(rng, 0, 63)) + ")";
      }
      return s;
    }
    default:
      return "x + ((" + g + ")*(" + g + ") | " + std::to_string(pick(rng, 0, 15)) + ")";
  }
}

std::vector<std::string> random_corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> out;
  out.reserve(count);
  while (out.size() < count) out.push_back(random_corpus_expression(rng));
  return out;
}

}  // namespace tfa::testing
