#include "tfa/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <random>

namespace tfa {
namespace {

bool is_leaf(Op op) { return op == Op::var || op == Op::constant; }

std::string expected_list(const std::vector<std::string>& expected) {
  std::string out;
  for (const auto& e : expected) {
    if (!out.empty()) out += ", ";
    out += e;
  }
  return out;
}

std::uint64_t constant_residue(std::uint64_t num, bool negative, std::uint64_t den) {
  const std::uint64_t signed_num = negative ? 0 - num : num;
  return signed_num * inverse_odd_u64(den);
}

std::uint64_t apply(const Node& n, std::uint64_t x, std::uint64_t a, std::uint64_t b) {
  switch (n.op) {
    case Op::var:
      return x;
    case Op::constant:
      return n.residue;
    case Op::add:
      return a + b;
    case Op::sub:
      return a - b;
    case Op::mul:
      return a * b;
    case Op::div:
      return a * n.residue;
    case Op::bit_and:
    case Op::mask:
      return a & b;
    case Op::bit_or:
      return a | b;
    case Op::bit_xor:
      return a ^ b;
    case Op::shl:
      return n.arg >= 64 ? 0 : a << n.arg;
    case Op::bit_not:
      return ~a;
    case Op::neg:
      return 0 - a;
    case Op::bit:
      return n.arg >= 64 ? 0 : (a >> n.arg) & 1;
    case Op::mod:
      return a & low_mask(static_cast<unsigned>(std::min<std::uint64_t>(n.arg, 64)));
  }
  return 0;
}

// Evaluates the whole post-order program at 64-bit precision.
std::uint64_t run(std::span<const Node> nodes, std::uint64_t x, std::uint64_t* vals) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    const std::uint64_t a = n.lhs >= 0 ? vals[n.lhs] : 0;
    const std::uint64_t b = n.rhs >= 0 ? vals[n.rhs] : 0;
    vals[i] = apply(n, x, a, b);
  }
  return vals[nodes.size() - 1];
}

void print(std::span<const Node> nodes, std::int32_t i, std::string& out) {
  const Node& n = nodes[i];
  auto binary = [&](const char* sym) {
    out += '(';
    print(nodes, n.lhs, out);
    out += ' ';
    out += sym;
    out += ' ';
    print(nodes, n.rhs, out);
    out += ')';
  };
  auto call = [&](const char* name) {
    out += name;
    out += '(';
    print(nodes, n.lhs, out);
    out += ", ";
    if (n.op == Op::mask) {
      print(nodes, n.rhs, out);
    } else {
      out += std::to_string(n.arg);
    }
    out += ')';
  };
  switch (n.op) {
    case Op::var:
      out += 'x';
      break;
    case Op::constant:
      if (!n.negative && n.den == 1) {
        out += std::to_string(n.num);
      } else {
        out += '(';
        if (n.negative) out += '-';
        out += std::to_string(n.num);
        if (n.den != 1) out += '/' + std::to_string(n.den);
        out += ')';
      }
      break;
    case Op::add: binary("+"); break;
    case Op::sub: binary("-"); break;
    case Op::mul: binary("*"); break;
    case Op::bit_and: binary("&"); break;
    case Op::bit_or: binary("|"); break;
    case Op::bit_xor: binary("^"); break;
    case Op::div:
    case Op::shl:
      out += '(';
      print(nodes, n.lhs, out);
      out += n.op == Op::div ? " / " : " << ";
      out += std::to_string(n.arg);
      out += ')';
      break;
    case Op::bit_not:
    case Op::neg:
      out += n.op == Op::neg ? "(-" : "(~";
      print(nodes, n.lhs, out);
      out += ')';
      break;
    case Op::mask: call("mask"); break;
    case Op::bit: call("bit"); break;
    case Op::mod: call("mod"); break;
  }
}

}  // namespace

ParseError::ParseError(std::size_t position, std::string message,
                       std::vector<std::string> expected)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " +
                         message +
                         (expected.empty() ? "" : " (expected " + expected_list(expected) + ")")),
      position_(position),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

// Recursive descent over the grammar in expr.hpp. Alongside each node it
// tracks whether the subtree is constant and its "lag": how many bits above
// position j an output bit j of the subtree may depend on. A T-function has
// lag 0.
class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr run(unsigned max_bits) {
    if (max_bits == 0 || max_bits > kMaxBits) {
      throw ParseError(0, "max precision must be in [1, 64]");
    }
    skip_ws();
    if (pos_ == src_.size()) throw ParseError(pos_, "empty expression", {"expression"});
    const std::int32_t root = parse_or();
    skip_ws();
    if (pos_ != src_.size()) {
      throw ParseError(pos_, "unexpected '" + std::string(1, src_[pos_]) + "'",
                       {"operator", "end of input"});
    }
    if (info_[root].lag > 0) {
      throw ParseError(0,
                       "not a T-function: a bit(e, i) term must be scaled by 2^i "
                       "(shift, constant multiple or mask)");
    }
    return Expr(std::move(nodes_), max_bits);
  }

 private:
  struct Info {
    unsigned lag = 0;
    bool constant = false;
  };

  std::int32_t push(Node n, Info info) {
    if (info.constant) info.lag = 0;
    nodes_.push_back(n);
    info_.push_back(info);
    return static_cast<std::int32_t>(nodes_.size() - 1);
  }

  std::int32_t push_binary(Op op, std::int32_t a, std::int32_t b) {
    Node n;
    n.op = op;
    n.lhs = a;
    n.rhs = b;
    const Info& ia = info_[a];
    const Info& ib = info_[b];
    Info info{std::max(ia.lag, ib.lag), ia.constant && ib.constant};
    if (op == Op::mul) {
      // A constant factor 2^s * odd absorbs s bits of lag.
      if (ib.constant) info.lag = reduce_lag(ia.lag, constant_value(b));
      if (ia.constant) info.lag = reduce_lag(ib.lag, constant_value(a));
    }
    return push(n, info);
  }

  static unsigned reduce_lag(unsigned lag, std::uint64_t factor) {
    if (factor == 0) return 0;
    const unsigned s = static_cast<unsigned>(std::countr_zero(factor));
    return lag > s ? lag - s : 0;
  }

  std::uint64_t constant_value(std::int32_t root) const {
    std::vector<std::uint64_t> vals(static_cast<std::size_t>(root) + 1);
    return tfa::run(std::span<const Node>(nodes_.data(), vals.size()), 0, vals.data());
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (src_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) {
      skip_ws();
      throw ParseError(pos_, pos_ == src_.size() ? "unexpected end of input"
                                                 : "unexpected '" + std::string(1, src_[pos_]) + "'",
                       {"'" + std::string(tok) + "'"});
    }
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  std::int32_t parse_or() {
    std::int32_t a = parse_xor();
    while (peek('|')) {
      ++pos_;
      a = push_binary(Op::bit_or, a, parse_xor());
    }
    return a;
  }

  std::int32_t parse_xor() {
    std::int32_t a = parse_and();
    while (peek('^')) {
      ++pos_;
      a = push_binary(Op::bit_xor, a, parse_and());
    }
    return a;
  }

  std::int32_t parse_and() {
    std::int32_t a = parse_shift();
    while (peek('&')) {
      ++pos_;
      a = push_binary(Op::bit_and, a, parse_shift());
    }
    return a;
  }

  std::int32_t parse_shift() {
    std::int32_t a = parse_sum();
    for (;;) {
      skip_ws();
      if (src_.substr(pos_, 2) == ">>") {
        throw ParseError(pos_, "right shift is not a T-function");
      }
      if (!accept("<<")) return a;
      const std::uint64_t amount = parse_int_argument("shift amount");
      Node n;
      n.op = Op::shl;
      n.lhs = a;
      n.arg = amount;
      const Info& ia = info_[a];
      a = push(n, {ia.lag > amount ? ia.lag - static_cast<unsigned>(amount) : 0u, ia.constant});
    }
  }

  std::int32_t parse_sum() {
    std::int32_t a = parse_product();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        a = push_binary(Op::add, a, parse_product());
      } else if (peek('-')) {
        ++pos_;
        a = push_binary(Op::sub, a, parse_product());
      } else {
        return a;
      }
    }
  }

  std::int32_t parse_product() {
    std::int32_t a = parse_unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        a = push_binary(Op::mul, a, parse_unary());
      } else if (peek('/')) {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        const std::uint64_t d = parse_int_argument("divisor");
        if (d % 2 == 0) {
          throw ParseError(at, "denominator " + std::to_string(d) +
                                   " is even; only odd denominators are 2-adic integers");
        }
        a = divide(a, d, at);
      } else {
        return a;
      }
    }
  }

  std::int32_t divide(std::int32_t a, std::uint64_t d, std::size_t at) {
    Node& n = nodes_[a];
    if (n.op == Op::constant) {
      if (n.den > ~std::uint64_t{0} / d) throw ParseError(at, "denominator overflows 64 bits");
      n.den *= d;
      n.residue = constant_residue(n.num, n.negative, n.den);
      return a;
    }
    Node div;
    div.op = Op::div;
    div.lhs = a;
    div.arg = d;
    div.residue = inverse_odd_u64(d);
    return push(div, info_[a]);
  }

  std::int32_t parse_unary() {
    if (peek('-')) {
      ++pos_;
      const std::int32_t a = parse_unary();
      Node& n = nodes_[a];
      if (n.op == Op::constant && static_cast<std::size_t>(a) == nodes_.size() - 1) {
        n.negative = !n.negative && n.num != 0;
        n.residue = constant_residue(n.num, n.negative, n.den);
        return a;
      }
      Node neg;
      neg.op = Op::neg;
      neg.lhs = a;
      return push(neg, info_[a]);
    }
    if (peek('~')) {
      ++pos_;
      const std::int32_t a = parse_unary();
      Node n;
      n.op = Op::bit_not;
      n.lhs = a;
      return push(n, info_[a]);
    }
    return parse_primary();
  }

  std::int32_t parse_primary() {
    skip_ws();
    if (pos_ == src_.size()) {
      throw ParseError(pos_, "unexpected end of input", {"'x'", "integer", "'('", "call"});
    }
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      const std::int32_t a = parse_or();
      expect(")");
      return a;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Node n;
      n.op = Op::constant;
      n.num = parse_uint();
      n.residue = n.num;
      return push(n, {0, true});
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = src_.substr(start, pos_ - start);
      if (name == "x") {
        Node n;
        n.op = Op::var;
        return push(n, {0, false});
      }
      if (name == "mask" || name == "bit" || name == "mod") return parse_call(name);
      throw ParseError(start, "unknown identifier '" + std::string(name) + "'",
                       {"'x'", "'mask'", "'bit'", "'mod'"});
    }
    throw ParseError(pos_, "unexpected '" + std::string(1, c) + "'",
                     {"'x'", "integer", "'('", "call"});
  }

  std::int32_t parse_call(std::string_view name) {
    expect("(");
    const std::int32_t a = parse_or();
    expect(",");
    Node n;
    n.lhs = a;
    const Info ia = info_[a];
    if (name == "mask") {
      skip_ws();
      const std::size_t at = pos_;
      const std::int32_t c = parse_or();
      if (!info_[c].constant) throw ParseError(at, "mask constant must not depend on x");
      expect(")");
      n.op = Op::mask;
      n.rhs = c;
      return push(n, {ia.lag, ia.constant});
    }
    const std::uint64_t arg = parse_int_argument(name == "bit" ? "bit index" : "modulus exponent");
    expect(")");
    n.arg = arg;
    if (name == "bit") {
      n.op = Op::bit;
      const unsigned lag = arg >= 64 ? 64u : static_cast<unsigned>(arg);
      return push(n, {std::min(64u, ia.lag + lag), ia.constant});
    }
    n.op = Op::mod;
    return push(n, {ia.lag, ia.constant});
  }

  std::uint64_t parse_int_argument(const char* what) {
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      throw ParseError(pos_, std::string(what) + " must be a non-negative integer literal",
                       {"integer"});
    }
    return parse_uint();
  }

  std::uint64_t parse_uint() {
    const std::size_t start = pos_;
    int base = 10;
    if (src_.substr(pos_, 2) == "0x" || src_.substr(pos_, 2) == "0X") {
      base = 16;
      pos_ += 2;
    }
    const char* first = src_.data() + pos_;
    const char* last = src_.data() + src_.size();
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(first, last, value, base);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError(start, "integer literal does not fit in 64 bits");
    }
    if (ec != std::errc{} || ptr == first) throw ParseError(pos_, "malformed integer", {"digit"});
    pos_ += static_cast<std::size_t>(ptr - first);
    if (pos_ < src_.size() &&
        (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      throw ParseError(pos_, "malformed integer literal");
    }
    return value;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::vector<Node> nodes_;
  std::vector<Info> info_;
};

Expr::Expr() : nodes_{Node{}}, max_bits_(kMaxBits) {}

Expr::Expr(std::vector<Node> nodes, unsigned max_bits)
    : nodes_(std::move(nodes)), max_bits_(max_bits) {}

Expr Expr::parse(std::string_view source, unsigned max_bits) {
  return Parser(source).run(max_bits);
}

void Expr::check_precision(unsigned bits) const {
  if (bits == 0 || bits > max_bits_) {
    throw DomainError("precision " + std::to_string(bits) + " exceeds the expression's maximum " +
                      std::to_string(max_bits_));
  }
}

std::uint64_t Expr::evaluate(std::uint64_t x, unsigned bits) const {
  check_precision(bits);
  const std::uint64_t m = low_mask(bits);
  if (nodes_.size() <= 128) {
    std::array<std::uint64_t, 128> vals;
    return run(nodes_, x & m, vals.data()) & m;
  }
  std::vector<std::uint64_t> vals(nodes_.size());
  return run(nodes_, x & m, vals.data()) & m;
}

Word Expr::evaluate(Word x) const { return Word(evaluate(x.value(), x.bits()), x.bits()); }

std::size_t Expr::operator_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return !is_leaf(n.op); }));
}

std::string Expr::to_string() const {
  std::string out;
  print(nodes_, static_cast<std::int32_t>(nodes_.size() - 1), out);
  return out;
}

Expr Expr::compose(const Expr& inner) const {
  std::vector<Node> out;
  std::vector<std::int32_t> where(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    if (n.op == Op::var) {
      const auto offset = static_cast<std::int32_t>(out.size());
      for (Node m : inner.nodes_) {
        if (m.lhs >= 0) m.lhs += offset;
        if (m.rhs >= 0) m.rhs += offset;
        out.push_back(m);
      }
    } else {
      Node m = n;
      if (m.lhs >= 0) m.lhs = where[m.lhs];
      if (m.rhs >= 0) m.rhs = where[m.rhs];
      out.push_back(m);
    }
    where[i] = static_cast<std::int32_t>(out.size() - 1);
  }
  return Expr(std::move(out), std::min(max_bits_, inner.max_bits_));
}

WordFunction Expr::at(unsigned bits) const {
  check_precision(bits);
  return [self = *this, bits](std::uint64_t x) { return self.evaluate(x, bits); };
}

std::optional<LipschitzCounterexample> lipschitz_spot_check(const WordFunction& f,
                                                            unsigned bits,
                                                            std::uint64_t trials,
                                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t m = low_mask(bits);
  std::uniform_int_distribution<unsigned> pick_s(1, bits);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::uint64_t x = rng() & m;
    const unsigned s = pick_s(rng);
    const std::uint64_t h = s >= 64 ? 0 : rng() << s;
    const std::uint64_t y = (x + h) & m;
    const std::uint64_t fx = f(x) & m;
    const std::uint64_t fy = f(y) & m;
    if (((fx ^ fy) & low_mask(s)) != 0) return LipschitzCounterexample{x, y, s, fx, fy};
  }
  return std::nullopt;
}

}  // namespace tfa
