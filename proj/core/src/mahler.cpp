#include "tfa/mahler.hpp"

#include <string>

namespace tfa {
namespace {

// Checks 2^exponent(i) | a_i for i in [first, N), grouping the indices by
// exponent. Conditions whose modulus exceeds 2^bits are undecidable.
template <class Exponent>
bool divisibility(const MahlerPrefix& p, std::uint64_t first, const char* id, Exponent exponent,
                  CriteriaReport& r) {
  bool ok = true;
  const std::uint64_t n = p.a.size();
  std::uint64_t i = first;
  while (i < n) {
    const unsigned e = exponent(i);
    std::uint64_t end = i;
    while (end < n && exponent(end) == e) ++end;
    if (e > p.bits) {
      r.evidence.push_back({id, e, i, Outcome::undecidable, std::nullopt});
    } else {
      Evidence ev{id, e, i, Outcome::pass, std::nullopt};
      for (std::uint64_t j = i; j < end; ++j) {
        if ((p.a[j] & low_mask(e)) != 0) {
          ev = {id, e, j, Outcome::fail, p.a[j]};
          ok = false;
          break;
        }
      }
      r.evidence.push_back(ev);
    }
    i = end;
  }
  return ok;
}

CriteriaReport base(const MahlerPrefix& p) {
  CriteriaReport r;
  r.family = Family::mahler;
  r.bits = p.bits;
  r.certified_up_to = p.bits;
  return r;
}

void compatibility_pass(const MahlerPrefix& p, CriteriaReport& r) {
  const bool ok = divisibility(p, 2, "2^floor(log2 i) | a_i",
                               [](std::uint64_t i) { return floor_log2(i); }, r);
  r.compatible = ok ? Verdict::consistent : Verdict::fail;
}

void measure_preservation_pass(const MahlerPrefix& p, CriteriaReport& r) {
  compatibility_pass(p, r);
  if (r.compatible == Verdict::fail) {
    r.measure_preserving = Verdict::fail;
    r.note = "not-compatible";
    return;
  }
  bool ok = true;
  if (p.a.size() > 1) {
    ok = (p.a[1] & 1) == 1;
    r.evidence.push_back({"a_1 odd", 1, 1, ok ? Outcome::pass : Outcome::fail, p.a[1]});
  }
  ok = divisibility(p, 2, "2^(floor(log2 i)+1) | a_i",
                    [](std::uint64_t i) { return floor_log2(i) + 1; }, r) &&
       ok;
  r.measure_preserving = ok ? Verdict::consistent : Verdict::fail;
}

}  // namespace

MahlerPrefix mahler_prefix(const WordFunction& f, unsigned bits, std::uint64_t points) {
  if (bits == 0 || bits > kMaxBits) throw DomainError("precision out of range");
  if (points == 0 || (bits < 64 && points > (std::uint64_t{1} << bits))) {
    throw DomainError("need 1 <= N <= 2^k Mahler points");
  }
  if (points > kMaxMahlerPoints) {
    throw CapExceeded("Mahler prefix limited to " + std::to_string(kMaxMahlerPoints) + " points");
  }
  const std::uint64_t m = low_mask(bits);
  std::vector<std::uint64_t> diff(points);
  for (std::uint64_t x = 0; x < points; ++x) diff[x] = f(x) & m;
  MahlerPrefix p;
  p.bits = bits;
  p.a.resize(points);
  for (std::uint64_t i = 0; i < points; ++i) {
    p.a[i] = diff[0];
    for (std::uint64_t j = 0; j + 1 < points - i; ++j) diff[j] = (diff[j + 1] - diff[j]) & m;
  }
  return p;
}

std::vector<std::uint64_t> mahler_interpolate(const MahlerPrefix& p, std::uint64_t points) {
  const std::uint64_t m = low_mask(p.bits);
  const std::uint64_t n = p.a.size();
  std::vector<std::uint64_t> row(n, 0);  // binom(x, i) mod 2^bits
  std::vector<std::uint64_t> out(points);
  if (n > 0) row[0] = 1;
  for (std::uint64_t x = 0; x < points; ++x) {
    std::uint64_t s = 0;
    for (std::uint64_t i = 0; i < n && i <= x; ++i) s += p.a[i] * row[i];
    out[x] = s & m;
    for (std::uint64_t i = std::min(n - 1, x + 1); i >= 1 && n > 1; --i) {
      row[i] = (row[i] + row[i - 1]) & m;
    }
  }
  return out;
}

CriteriaReport check_compatibility_mahler(const MahlerPrefix& p) {
  CriteriaReport r = base(p);
  compatibility_pass(p, r);
  return r;
}

CriteriaReport check_measure_preservation_mahler(const MahlerPrefix& p) {
  CriteriaReport r = base(p);
  measure_preservation_pass(p, r);
  return r;
}

CriteriaReport check_ergodicity_mahler(const MahlerPrefix& p) {
  CriteriaReport r = base(p);
  measure_preservation_pass(p, r);
  if (r.measure_preserving == Verdict::fail) {
    r.ergodic = Verdict::fail;
    if (r.note.empty()) r.note = "not-measure-preserving";
    return r;
  }
  bool ok = (p.a[0] & 1) == 1;
  r.evidence.push_back({"a_0 odd", 0, 0, ok ? Outcome::pass : Outcome::fail, p.a[0]});
  if (p.a.size() > 1) {
    if (p.bits >= 2) {
      const bool a1 = (p.a[1] & 3) == 1;
      r.evidence.push_back({"a_1 = 1 mod 4", 2, 1, a1 ? Outcome::pass : Outcome::fail, p.a[1]});
      ok = ok && a1;
    } else {
      r.evidence.push_back({"a_1 = 1 mod 4", 2, 1, Outcome::undecidable, std::nullopt});
    }
  }
  ok = divisibility(p, 2, "2^(floor(log2(i+1))+1) | a_i",
                    [](std::uint64_t i) { return floor_log2(i + 1) + 1; }, r) &&
       ok;
  r.ergodic = ok ? Verdict::consistent : Verdict::fail;
  return r;
}

}  // namespace tfa
