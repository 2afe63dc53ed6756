#include "tfa/vdp.hpp"

#include <string>

namespace tfa {
namespace {

template <bool Count>
std::uint64_t knapsack(std::span<const std::uint64_t> b, unsigned k, std::uint64_t x,
                       EvalCounters* c) {
  if constexpr (Count) {
    ++c->masks;
    ++c->compares;
    ++c->loads;
  }
  std::uint64_t s = b[x & 1];
  for (unsigned i = 2; i <= k; ++i) {
    const std::uint64_t r = x & low_mask(i);
    if constexpr (Count) {
      ++c->masks;
      ++c->compares;
    }
    if (r >= (std::uint64_t{1} << (i - 1))) {
      if constexpr (Count) {
        ++c->loads;
        ++c->adds;
      }
      s += b[r];
    }
  }
  return s & low_mask(k);
}

void require_table_bits(unsigned bits) {
  if (bits == 0 || bits > kMaxTableBits) {
    throw CapExceeded("coefficient tables support 1 <= k <= " + std::to_string(kMaxTableBits) +
                      ", got " + std::to_string(bits));
  }
}

std::uint64_t level_begin(unsigned n) { return std::uint64_t{1} << (n - 1); }
std::uint64_t level_end(unsigned n) { return std::uint64_t{1} << n; }

// Level n holds the indices m with floor(log2 m) = n - 1, n >= 1.
void compatibility_pass(const VdpTable& t, CriteriaReport& r) {
  const unsigned k = t.bits();
  bool ok = true;
  for (unsigned n = 2; n <= k; ++n) {
    Evidence e{"compatible", n, level_begin(n), Outcome::pass, std::nullopt};
    const std::uint64_t need = low_mask(n - 1);
    for (std::uint64_t m = level_begin(n); m < level_end(n); ++m) {
      if ((t[m] & need) != 0) {
        e = {"compatible", n, m, Outcome::fail, t[m]};
        ok = false;
        break;
      }
    }
    r.evidence.push_back(e);
  }
  r.compatible = ok ? Verdict::pass : Verdict::fail;
}

void measure_preservation_pass(const VdpTable& t, CriteriaReport& r) {
  compatibility_pass(t, r);
  if (r.compatible != Verdict::pass) {
    r.measure_preserving = Verdict::fail;
    r.note = "not-compatible";
    return;
  }
  const unsigned k = t.bits();
  bool ok = ((t[0] + t[1]) & 1) == 1;
  r.evidence.push_back({"B0+B1 odd", 1, 1, ok ? Outcome::pass : Outcome::fail,
                        (t[0] + t[1]) & low_mask(k)});
  for (unsigned n = 2; n <= k; ++n) {
    Evidence e{"exact valuation", n, level_begin(n), Outcome::pass, std::nullopt};
    for (std::uint64_t m = level_begin(n); m < level_end(n); ++m) {
      if (((t[m] >> (n - 1)) & 1) == 0) {
        e = {"exact valuation", n, m, Outcome::fail, t[m]};
        ok = false;
        break;
      }
    }
    r.evidence.push_back(e);
  }
  r.measure_preserving = ok ? Verdict::pass : Verdict::fail;
}

}  // namespace

EvalCounters& EvalCounters::operator+=(const EvalCounters& o) noexcept {
  loads += o.loads;
  adds += o.adds;
  masks += o.masks;
  compares += o.compares;
  return *this;
}

unsigned chi(std::uint64_t m, Word x) {
  if (x.bits() < 64 && m >= (std::uint64_t{1} << x.bits())) {
    throw DomainError("chi: index " + std::to_string(m) + " exceeds the word");
  }
  const unsigned n = floor_log2(m) + 1;
  return ((x.value() ^ m) & low_mask(n)) == 0 ? 1u : 0u;
}

VdpTable::VdpTable(unsigned bits, std::vector<std::uint64_t> coeffs)
    : bits_(bits), coeffs_(std::move(coeffs)) {
  require_table_bits(bits);
  if (coeffs_.size() != (std::size_t{1} << bits)) {
    throw DomainError("a " + std::to_string(bits) + "-bit table needs " +
                      std::to_string(std::size_t{1} << bits) + " coefficients, got " +
                      std::to_string(coeffs_.size()));
  }
  for (auto& c : coeffs_) c &= low_mask(bits);
}

VdpTable VdpTable::from_values(std::span<const std::uint64_t> values, unsigned bits) {
  require_table_bits(bits);
  const std::size_t n = std::size_t{1} << bits;
  if (values.size() < n) throw DomainError("not enough function values for the table");
  std::vector<std::uint64_t> b(n);
  b[0] = values[0];
  if (n > 1) b[1] = values[1];
  for (std::uint64_t m = 2; m < n; ++m) {
    b[m] = values[m] - values[m - (std::uint64_t{1} << floor_log2(m))];
  }
  return VdpTable(bits, std::move(b));
}

VdpTable VdpTable::from_function(const WordFunction& f, unsigned bits) {
  require_table_bits(bits);
  const auto values = tabulate(f, bits);
  return from_values(values, bits);
}

VdpTable coefficients_from_function(const WordFunction& f, unsigned bits) {
  return VdpTable::from_function(f, bits);
}

std::uint64_t VdpTable::reduced(std::uint64_t m) const { return coeffs_[m] >> floor_log2(m); }

std::uint64_t VdpTable::evaluate(std::uint64_t x) const noexcept {
  return knapsack<false>(coeffs_, bits_, x, nullptr);
}

std::uint64_t VdpTable::evaluate(std::uint64_t x, EvalCounters& counters) const noexcept {
  return knapsack<true>(coeffs_, bits_, x, &counters);
}

Word VdpTable::evaluate(Word x) const {
  if (x.bits() != bits_) {
    throw PrecisionMismatch("table has " + std::to_string(bits_) + " bits, input has " +
                            std::to_string(x.bits()));
  }
  return Word(evaluate(x.value()), bits_);
}

WordFunction VdpTable::as_function() const {
  return [t = *this](std::uint64_t x) { return t.evaluate(x & low_mask(t.bits())); };
}

CriteriaReport check_compatibility(const VdpTable& t) {
  CriteriaReport r;
  r.family = Family::van_der_put;
  r.bits = t.bits();
  r.certified_up_to = t.bits();
  compatibility_pass(t, r);
  return r;
}

CriteriaReport check_measure_preservation(const VdpTable& t) {
  CriteriaReport r;
  r.family = Family::van_der_put;
  r.bits = t.bits();
  r.certified_up_to = t.bits();
  measure_preservation_pass(t, r);
  return r;
}

CriteriaReport check_ergodicity(const VdpTable& t) {
  const unsigned k = t.bits();
  if (k < 3) {
    throw InsufficientPrecision("ergodicity criteria need k >= 3, got " + std::to_string(k));
  }
  CriteriaReport r;
  r.family = Family::van_der_put;
  r.bits = k;
  r.certified_up_to = k;
  measure_preservation_pass(t, r);
  if (r.measure_preserving != Verdict::pass) {
    r.ergodic = Verdict::fail;
    if (r.note.empty()) r.note = "not-measure-preserving";
    return r;
  }
  bool ok = true;
  auto record = [&](const char* id, unsigned level, std::uint64_t index, bool pass,
                    std::uint64_t value) {
    r.evidence.push_back({id, level, index, pass ? Outcome::pass : Outcome::fail, value});
    ok = ok && pass;
  };
  const std::uint64_t b0 = t.reduced(0);
  const std::uint64_t b1 = t.reduced(1);
  record("(i) b0 odd", 0, 0, (b0 & 1) == 1, b0);
  record("(ii) b0+b1 = 3 mod 4", 1, 1, ((b0 + b1) & 3) == 3, (b0 + b1) & 3);
  // (iii) is the exact-valuation evidence above; restate it per level.
  for (unsigned n = 2; n <= k; ++n) {
    std::uint64_t bad = 0;
    bool pass = true;
    for (std::uint64_t m = level_begin(n); m < level_end(n); ++m) {
      if ((t.reduced(m) & 1) == 0) {
        bad = m;
        pass = false;
        break;
      }
    }
    record("(iii) b_m odd", n, pass ? level_begin(n) : bad, pass, t.reduced(pass ? level_begin(n) : bad));
  }
  const std::uint64_t s23 = (t.reduced(2) + t.reduced(3)) & 3;
  record("(iv) b2+b3 = 2 mod 4", 2, 2, s23 == 2, s23);
  for (unsigned n = 3; n < k; ++n) {
    std::uint64_t sum = 0;
    for (std::uint64_t m = level_begin(n); m < level_end(n); ++m) sum += t.reduced(m);
    record("(v) level sum = 0 mod 4", n, level_begin(n), (sum & 3) == 0, sum & 3);
  }
  if (k >= 3) {
    r.evidence.push_back(
        {"(v) level sum = 0 mod 4", k, level_begin(k), Outcome::undecidable, std::nullopt});
  }
  r.ergodic = ok ? Verdict::pass : Verdict::fail;
  return r;
}

bool ergodic_by_level_sums(const VdpTable& t) {
  const unsigned k = t.bits();
  if (check_measure_preservation(t).measure_preserving != Verdict::pass) return false;
  const std::uint64_t mod = low_mask(k);
  if ((t[0] & 1) != 1) return false;
  if (k >= 2 && ((t[0] + t[1]) & 3) != 3) return false;
  for (unsigned n = 2; n <= k; ++n) {
    for (std::uint64_t m = level_begin(n); m + 1 < level_end(n); ++m) {
      if ((t[m] & low_mask(n)) != level_begin(n)) return false;
    }
  }
  for (unsigned n = 2; n + 1 <= k; ++n) {
    std::uint64_t sum = 0;
    for (std::uint64_t m = level_begin(n); m < level_end(n); ++m) sum += t[m] - level_begin(n);
    if ((sum & mod & low_mask(n + 1)) != 0) return false;
  }
  return true;
}

VdpTable table_from_asequence(const ASequence& s) {
  const unsigned k = s.bits;
  require_table_bits(k);
  const std::size_t n_coeffs = std::size_t{1} << k;
  if (s.a.size() != n_coeffs + 1) {
    throw DomainError("a-sequence for k = " + std::to_string(k) + " needs " +
                      std::to_string(n_coeffs + 1) + " entries");
  }
  const auto& a = s.a;
  std::vector<std::uint64_t> b(n_coeffs);
  b[0] = 1 + 2 * (a[1] - a[0]);
  if (n_coeffs > 1) b[1] = 2 * (1 + a[0] + 2 * a[2] - a[1]);
  for (unsigned n = 2; n <= k; ++n) {
    const std::uint64_t half = level_begin(n);
    const std::uint64_t last = level_end(n) - 1;
    for (std::uint64_t m = half; m < last; ++m) {
      b[m] = half + (std::uint64_t{1} << n) * (a[m + 1] - a[m]);
    }
    b[last] = half + (std::uint64_t{1} << (n + 1)) * a[last + 1] -
              (std::uint64_t{1} << n) * (a[last] + a[half]);
  }
  return VdpTable(k, std::move(b));
}

ASequence asequence_from_table(const VdpTable& t) {
  const unsigned k = t.bits();
  if (k < 3 || check_ergodicity(t).ergodic != Verdict::pass) {
    throw NotErgodic("coefficient table is not ergodic; no a-sequence exists");
  }
  const std::uint64_t mod = low_mask(k);
  ASequence s;
  s.bits = k;
  s.a.assign((std::size_t{1} << k) + 1, 0);
  auto& a = s.a;
  a[0] = 0;
  a[1] = ((t[0] - 1) & mod) >> 1;
  a[2] = ((t[1] + t[0] - 3) & mod) >> 2;
  for (unsigned n = 2; n <= k; ++n) {
    const std::uint64_t half = level_begin(n);
    const unsigned known = k - n;  // bits of each (B_m - 2^(n-1)) / 2^n
    std::uint64_t running = 0;
    for (std::uint64_t m = half; m < level_end(n); ++m) {
      const std::uint64_t check = ((t[m] - half) & mod) >> n;
      running += check;
      if (m + 1 < level_end(n)) a[m + 1] = (a[half] + running) & mod;
    }
    a[level_end(n)] = (a[half] + ((running & low_mask(known)) >> 1)) & mod;
  }
  return s;
}

}  // namespace tfa
