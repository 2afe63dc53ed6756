#include "tfa/gallery.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace tfa {
namespace {

std::string join(std::span<const std::uint64_t> v) {
  std::string out;
  for (const auto x : v) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& key) {
  std::uint64_t v = 0;
  int base = 10;
  std::string_view body = s;
  if (body.starts_with("0x") || body.starts_with("0X")) {
    base = 16;
    body.remove_prefix(2);
  }
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v, base);
  if (ec != std::errc{} || ptr != body.data() + body.size()) {
    throw DomainError("parameter " + key + ": '" + s + "' is not an unsigned integer");
  }
  return v;
}

std::vector<std::uint64_t> parse_list(const std::string& s, const std::string& key) {
  std::vector<std::uint64_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_u64(item, key));
  return out;
}

const std::string& param(const GalleryParams& p, const std::string& key,
                         const std::string& fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

Prediction always(bool mp, std::optional<bool> erg) { return Prediction{mp, erg}; }

}  // namespace

GalleryEntry klimov_shamir(std::uint64_t c) {
  GalleryEntry e;
  e.name = "klimov-shamir";
  e.parameters = "C=" + std::to_string(c);
  e.expr = Expr::parse("x + (x*x | " + std::to_string(c) + ")");
  const bool bijective = c % 2 == 1;
  const bool ergodic = c % 8 == 5 || c % 8 == 7;
  e.predict = [bijective, ergodic](unsigned bits) -> std::optional<Prediction> {
    if (bits < 3) return std::nullopt;
    return always(bijective, ergodic);
  };
  e.claim = "x+(x*x|C) is transitive mod 2^n (n>=3) iff C mod 8 in {5,7}";
  return e;
}

bool add_xor_transitive_mod4(std::span<const std::uint64_t> c, std::span<const std::uint64_t> d) {
  auto step = [&](std::uint64_t x) {
    for (std::size_t i = 0; i < c.size(); ++i) x = ((x + c[i]) ^ d[i]) & 3;
    return x;
  };
  std::uint64_t x = 0;
  for (int n = 1; n <= 4; ++n) {
    x = step(x);
    if (x == 0) return n == 4;
  }
  return false;
}

GalleryEntry add_xor(std::span<const std::uint64_t> c, std::span<const std::uint64_t> d) {
  if (c.empty() || c.size() != d.size()) {
    throw DomainError("add-xor needs equally long, non-empty c and d lists");
  }
  std::string s = "x";
  for (std::size_t i = 0; i < c.size(); ++i) {
    s = "((" + s + " + " + std::to_string(c[i]) + ") ^ " + std::to_string(d[i]) + ")";
  }
  GalleryEntry e;
  e.name = "add-xor";
  e.parameters = "c=" + join(c) + " d=" + join(d);
  e.expr = Expr::parse(s);
  const bool ergodic = add_xor_transitive_mod4(c, d);
  e.predict = [ergodic](unsigned bits) -> std::optional<Prediction> {
    if (bits < 2) return Prediction{true, std::nullopt};
    return always(true, ergodic);
  };
  e.claim = "add-xor composition is transitive mod 2^n (n>=2) iff transitive mod 4";
  return e;
}

GalleryEntry masked_sum(std::uint64_t c, std::span<const std::uint64_t> d) {
  if (d.empty() || d.size() > kMaxBits) throw DomainError("masked-sum needs 1..64 d values");
  std::string s = std::to_string(c);
  for (std::size_t i = 0; i < d.size(); ++i) {
    s += " + " + std::to_string(d[i]) + "*mask(x, " + std::to_string(std::uint64_t{1} << i) + ")";
  }
  GalleryEntry e;
  e.name = "masked-sum";
  e.parameters = "c=" + std::to_string(c) + " d=" + join(d);
  e.expr = Expr::parse(s, static_cast<unsigned>(d.size()));
  e.predict = [c, d = std::vector<std::uint64_t>(d.begin(), d.end())](
                  unsigned bits) -> std::optional<Prediction> {
    if (bits > d.size()) return std::nullopt;
    bool all_odd = true;
    for (unsigned i = 0; i < bits; ++i) all_odd = all_odd && d[i] % 2 == 1;
    bool ergodic = c % 2 == 1 && all_odd;
    // d_0 == 1 (mod 4) only matters once bit 1 is observed.
    if (bits >= 2) ergodic = ergodic && d[0] % 4 == 1;
    return always(all_odd, ergodic);
  };
  e.claim = "c + sum d_i*mask(x,2^i) is ergodic iff c odd, d_0 = 1 mod 4, d_i odd (i>=1)";
  return e;
}

std::uint64_t prefix_weighted_mask_direct(std::uint64_t x, unsigned bits) {
  std::uint64_t f = 1 + (x & 1) + 6 * ((x >> 1) & 1);
  for (unsigned j = 2; j < bits; ++j) {
    if ((x >> j) & 1) f += (1 + 2 * (x & low_mask(j))) << j;
  }
  return f & low_mask(bits);
}

GalleryEntry prefix_weighted_mask(unsigned bits) {
  if (bits == 0 || bits > kMaxBits) throw DomainError("precision out of range");
  std::string s = "1 + bit(x, 0) + 6*bit(x, 1)";
  for (unsigned j = 2; j < bits; ++j) {
    s += " + (1 + 2*mod(x, " + std::to_string(j) + "))*mask(x, " +
         std::to_string(std::uint64_t{1} << j) + ")";
  }
  GalleryEntry e;
  e.name = "prefix-weighted-mask";
  e.parameters = "bits=" + std::to_string(bits);
  e.expr = Expr::parse(s, bits);
  e.predict = [](unsigned) -> std::optional<Prediction> { return always(true, true); };
  e.claim = "1+bit(x,0)+6*bit(x,1)+sum (1+2(x mod 2^j))*2^j*bit(x,j) is ergodic";
  return e;
}

std::vector<GalleryEntry> delta_constructors(const Expr& g, std::uint64_t d) {
  const std::string gs = g.to_string();
  const std::string g1 = g.compose(Expr::parse("x + 1")).to_string();
  GalleryEntry bij;
  bij.name = "delta-bijective";
  bij.parameters = "g=" + gs + " d=" + std::to_string(d);
  bij.expr = Expr::parse(std::to_string(d) + " + x + 2*(" + gs + ")", g.max_bits());
  bij.predict = [](unsigned) -> std::optional<Prediction> { return always(true, std::nullopt); };
  bij.claim = "d + x + 2*g(x) is bijective for every T-function g";
  GalleryEntry erg;
  erg.name = "delta-ergodic";
  erg.parameters = "g=" + gs;
  erg.expr = Expr::parse("1 + x + 2*(" + g1 + " - " + gs + ")", g.max_bits());
  erg.predict = [](unsigned) -> std::optional<Prediction> { return always(true, true); };
  erg.claim = "1 + x + 2*(g(x+1) - g(x)) is ergodic for every T-function g";
  return {bij, erg};
}

std::vector<GalleryEntry> comp_bool_constructors(const Expr& f, const Expr& g) {
  const std::string fs = f.to_string();
  const std::string gs = g.to_string();
  const unsigned bits = std::min(f.max_bits(), g.max_bits());
  struct Variant {
    const char* name;
    Expr expr;
  };
  const std::vector<Variant> variants = {
      {"comp-bool-add-inner", f.compose(Expr::parse("x + 4*(" + gs + ")", bits))},
      {"comp-bool-xor-inner", f.compose(Expr::parse("x ^ (4*(" + gs + "))", bits))},
      {"comp-bool-add-outer", Expr::parse("(" + fs + ") + 4*(" + gs + ")", bits)},
      {"comp-bool-xor-outer", Expr::parse("(" + fs + ") ^ (4*(" + gs + "))", bits)},
  };
  std::vector<GalleryEntry> out;
  for (const auto& v : variants) {
    GalleryEntry e;
    e.name = v.name;
    e.parameters = "f=" + fs + " g=" + gs;
    e.expr = v.expr;
    e.predict = [](unsigned) -> std::optional<Prediction> { return always(true, true); };
    e.claim = "for ergodic f and any T-function g, f(x+4g), f(x^4g), f+4g and f^4g are ergodic";
    out.push_back(std::move(e));
  }
  return out;
}

const std::vector<GalleryFamily>& gallery_families() {
  static const std::vector<GalleryFamily> families = {
      {"klimov-shamir", "C=<int>", klimov_shamir(0).claim,
       [](const GalleryParams& p, unsigned) {
         return std::vector<GalleryEntry>{klimov_shamir(parse_u64(param(p, "C", "5"), "C"))};
       }},
      {"add-xor", "c=<list> d=<list>", "add-xor composition is transitive mod 2^n iff mod 4",
       [](const GalleryParams& p, unsigned) {
         const auto c = parse_list(param(p, "c", "1"), "c");
         const auto d = parse_list(param(p, "d", "0"), "d");
         return std::vector<GalleryEntry>{add_xor(c, d)};
       }},
      {"masked-sum", "c=<int> d=<list, one per bit>",
       "c + sum d_i*mask(x,2^i) is ergodic iff c odd, d_0 = 1 mod 4, d_i odd",
       [](const GalleryParams& p, unsigned bits) {
         auto d = parse_list(param(p, "d", "1"), "d");
         // A single value stands for every coefficient.
         if (d.size() == 1) d.assign(bits, d[0]);
         return std::vector<GalleryEntry>{masked_sum(parse_u64(param(p, "c", "1"), "c"), d)};
       }},
      {"prefix-weighted-mask", "(no parameters)",
       "1+bit(x,0)+6*bit(x,1)+sum (1+2(x mod 2^j))*2^j*bit(x,j) is ergodic",
       [](const GalleryParams&, unsigned bits) {
         return std::vector<GalleryEntry>{prefix_weighted_mask(bits)};
       }},
      {"delta", "g=<expr> d=<int>", "d+x+2g bijective; 1+x+2(g(x+1)-g(x)) ergodic",
       [](const GalleryParams& p, unsigned) {
         return delta_constructors(Expr::parse(param(p, "g", "x*x")),
                                   parse_u64(param(p, "d", "0"), "d"));
       }},
      {"comp-bool", "f=<ergodic expr> g=<expr>",
       "f(x+4g), f(x^4g), f+4g, f^4g are ergodic for ergodic f",
       [](const GalleryParams& p, unsigned) {
         return comp_bool_constructors(Expr::parse(param(p, "f", "x + 1")),
                                       Expr::parse(param(p, "g", "x")));
       }},
  };
  return families;
}

const GalleryFamily& gallery_family(const std::string& name) {
  const auto& all = gallery_families();
  const auto it = std::find_if(all.begin(), all.end(),
                               [&](const GalleryFamily& f) { return f.name == name; });
  if (it == all.end()) throw DomainError("unknown gallery family '" + name + "'");
  return *it;
}

std::vector<GalleryEntry> default_gallery(unsigned bits) {
  std::vector<GalleryEntry> out;
  for (std::uint64_t c = 0; c < 16; ++c) out.push_back(klimov_shamir(c));
  const std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> ax = {
      {{1}, {0}}, {{0}, {1}}, {{1, 3}, {2, 5}}, {{3, 1, 7}, {1, 6, 2}}, {{5, 2}, {0, 3}}};
  for (const auto& [c, d] : ax) out.push_back(add_xor(c, d));
  const std::vector<std::uint64_t> ones(bits, 1);
  std::vector<std::uint64_t> abc(bits, 3);
  abc[0] = 5;
  std::vector<std::uint64_t> broken = abc;
  if (bits > 3) broken[3] = 2;
  out.push_back(masked_sum(1, ones));
  out.push_back(masked_sum(1, abc));
  out.push_back(masked_sum(2, abc));
  out.push_back(masked_sum(1, broken));
  out.push_back(prefix_weighted_mask(bits));
  for (auto& e : delta_constructors(Expr::parse("x*x"), 3)) out.push_back(std::move(e));
  for (auto& e : delta_constructors(Expr::parse("(x ^ 5) & (x << 1)"), 0)) {
    out.push_back(std::move(e));
  }
  for (auto& e : comp_bool_constructors(Expr::parse("x + 1"), Expr::parse("x"))) {
    out.push_back(std::move(e));
  }
  for (auto& e : comp_bool_constructors(Expr::parse("x + (x*x | 7)"), Expr::parse("x*x ^ 9"))) {
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace tfa
