#pragma once

// T-function expression language.
//
//   expr    := or
//   or      := xor  { "|" xor }
//   xor     := and  { "^" and }
//   and     := shift { "&" shift }
//   shift   := sum  { "<<" INT }
//   sum     := product { ("+" | "-") product }
//   product := unary { "*" unary | "/" INT }        divisor must be odd
//   unary   := ("-" | "~") unary | primary
//   primary := "x" | INT | "(" expr ")"
//            | "mask" "(" expr "," expr ")"           second argument constant
//            | "bit"  "(" expr "," INT ")"
//            | "mod"  "(" expr "," INT ")"
//   INT     := decimal | "0x" hex
//
// `INT / INT` and unary minus on a literal fold into a single rational
// constant whose residue is taken at parse time. bit(e, i) is the i-th
// binary digit of e; it only appears in a T-function when scaled by 2^i
// (shift, constant multiple, or mask), and the parser rejects expressions
// in which it is not.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tfa/function.hpp"
#include "tfa/word.hpp"

namespace tfa {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string message, std::vector<std::string> expected = {});

  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string message_;
  std::vector<std::string> expected_;
};

enum class Op : std::uint8_t {
  var,
  constant,
  add,
  sub,
  mul,
  div,  // by an odd integer literal
  bit_and,
  bit_or,
  bit_xor,
  shl,
  bit_not,
  neg,
  mask,
  bit,
  mod,
};

/// One AST node. Nodes are stored in post-order: children precede parents
/// and the root is last.
struct Node {
  Op op = Op::var;
  std::int32_t lhs = -1;
  std::int32_t rhs = -1;
  // shl/bit/mod: the integer argument; div: the divisor.
  std::uint64_t arg = 0;
  // constant: numerator magnitude, sign and odd denominator.
  std::uint64_t num = 0;
  bool negative = false;
  std::uint64_t den = 1;
  // constant: residue mod 2^64; div: inverse of the divisor mod 2^64.
  std::uint64_t residue = 0;

  friend bool operator==(const Node&, const Node&) = default;
};

class Expr {
 public:
  /// The identity function.
  Expr();

  static Expr parse(std::string_view source, unsigned max_bits = kMaxBits);

  /// f(x) mod 2^bits for x < 2^bits. Requires bits <= max_bits().
  std::uint64_t evaluate(std::uint64_t x, unsigned bits) const;
  Word evaluate(Word x) const;

  unsigned max_bits() const noexcept { return max_bits_; }
  std::span<const Node> nodes() const noexcept { return nodes_; }

  /// Number of operator nodes, i.e. instructions a direct evaluation runs.
  std::size_t operator_count() const noexcept;

  /// Fully parenthesized source; parse(to_string()) rebuilds the same AST.
  std::string to_string() const;

  /// f(g(x)); the result's max precision is the smaller of the two.
  Expr compose(const Expr& inner) const;

  WordFunction at(unsigned bits) const;

  friend bool operator==(const Expr& a, const Expr& b) { return a.nodes_ == b.nodes_; }

 private:
  Expr(std::vector<Node> nodes, unsigned max_bits);
  void check_precision(unsigned bits) const;

  std::vector<Node> nodes_;
  unsigned max_bits_ = kMaxBits;

  friend class Parser;
};

struct LipschitzCounterexample {
  std::uint64_t x = 0;
  std::uint64_t y = 0;  // y == x (mod 2^s)
  unsigned s = 0;
  std::uint64_t fx = 0;
  std::uint64_t fy = 0;
};

/// Random check of f(x) == f(x + 2^s h) (mod 2^s) at precision `bits`.
/// Returns the first violation, if any.
std::optional<LipschitzCounterexample> lipschitz_spot_check(const WordFunction& f,
                                                            unsigned bits,
                                                            std::uint64_t trials,
                                                            std::uint64_t seed = 1);

}  // namespace tfa
