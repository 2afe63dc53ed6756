#include "analysis.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "tfa/anf.hpp"
#include "tfa/mahler.hpp"

namespace tfa::tools {
namespace {

using Clock = std::chrono::steady_clock;

template <class F>
auto timed(nlohmann::json& timing, const char* key, F&& f) {
  const auto start = Clock::now();
  auto result = f();
  timing[key] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

bool wants(const AnalysisOptions& o, Family f) {
  return std::find(o.families.begin(), o.families.end(), f) != o.families.end();
}

std::string verdict_name(Verdict v) { return std::string(to_string(v)); }

// A definite verdict on one property from one source.
struct Vote {
  std::string source;
  bool positive;
};

void compare(const std::string& property, const std::vector<Vote>& exact,
             const std::optional<Verdict>& mahler, std::vector<std::string>& out) {
  for (std::size_t i = 1; i < exact.size(); ++i) {
    if (exact[i].positive != exact[0].positive) {
      out.push_back(property + ": " + exact[0].source + " says " +
                    (exact[0].positive ? "yes" : "no") + ", " + exact[i].source + " says " +
                    (exact[i].positive ? "yes" : "no"));
    }
  }
  // Mahler can only refute.
  if (mahler && *mahler == Verdict::fail) {
    for (const auto& v : exact) {
      if (v.positive) out.push_back(property + ": mahler refutes, " + v.source + " confirms");
    }
  }
}

void add_vote(std::vector<Vote>& votes, const char* source, Verdict v) {
  if (v == Verdict::pass || v == Verdict::fail) votes.push_back({source, v == Verdict::pass});
}

void reconcile(Analysis& a) {
  if (a.compatible == Verdict::fail) {
    a.skipped = "input is not a T-function; bijectivity and transitivity criteria do not apply";
    return;
  }
  if (a.mahler && a.mahler->compatible == Verdict::fail) {
    a.disagreements.push_back("compatibility: mahler refutes a compatible input");
  }
  std::vector<Vote> mp;
  std::vector<Vote> erg;
  if (a.vdp) {
    add_vote(mp, "vdp", a.vdp->measure_preserving);
    add_vote(erg, "vdp", a.vdp->ergodic);
  }
  if (a.anf) {
    add_vote(mp, "anf", a.anf->measure_preserving);
    add_vote(erg, "anf", a.anf->ergodic);
  }
  if (a.oracle) {
    mp.push_back({"oracle", a.oracle->bijective});
    erg.push_back({"oracle", a.oracle->transitive});
  }
  std::optional<Verdict> mahler_mp;
  std::optional<Verdict> mahler_erg;
  if (a.mahler) {
    mahler_mp = a.mahler->measure_preserving;
    mahler_erg = a.mahler->ergodic;
  }
  compare("measure-preserving", mp, mahler_mp, a.disagreements);
  compare("ergodic", erg, mahler_erg, a.disagreements);
  for (const auto* r : {&a.vdp, &a.anf, &a.mahler}) {
    if (*r && !(*r)->monotone()) {
      a.disagreements.push_back(std::string(to_string((*r)->family)) +
                                ": verdicts are not monotone");
    }
  }
}

// Worst-case and total table-evaluation counters over a deterministic
// spread of inputs that always includes the all-ones word.
nlohmann::json table_counters(const VdpTable& t) {
  const std::uint64_t n = std::uint64_t{1} << t.bits();
  const std::uint64_t samples = std::min<std::uint64_t>(n, 1 << 16);
  const std::uint64_t stride = n / samples;
  EvalCounters total;
  EvalCounters worst;
  auto visit = [&](std::uint64_t x) {
    EvalCounters c;
    t.evaluate(x, c);
    total += c;
    worst.loads = std::max(worst.loads, c.loads);
    worst.adds = std::max(worst.adds, c.adds);
    worst.masks = std::max(worst.masks, c.masks);
    worst.compares = std::max(worst.compares, c.compares);
  };
  for (std::uint64_t i = 0; i < samples; ++i) visit(i * stride);
  visit(n - 1);
  const double count = static_cast<double>(samples + 1);
  return {{"inputs", samples + 1},
          {"max_loads", worst.loads},
          {"max_adds", worst.adds},
          {"max_masks", worst.masks},
          {"max_compares", worst.compares},
          {"mean_loads", static_cast<double>(total.loads) / count},
          {"mean_adds", static_cast<double>(total.adds) / count}};
}

Analysis run(const WordFunction& f, const VdpTable& table, Analysis a, const AnalysisOptions& o) {
  const unsigned k = o.bits;
  const CriteriaReport compat = check_compatibility(table);
  a.compatible = compat.compatible;
  if (wants(o, Family::van_der_put)) {
    a.vdp = timed(a.timing_ms, "vdp", [&] {
      return k >= 3 ? check_ergodicity(table) : check_measure_preservation(table);
    });
    if (k < 3 && a.vdp->note.empty()) a.vdp->note = "ergodicity needs k >= 3";
  }
  if (wants(o, Family::anf)) {
    a.anf = timed(a.timing_ms, "anf", [&] { return check_ergodicity_anf(f, k); });
  }
  if (wants(o, Family::mahler)) {
    a.mahler = timed(a.timing_ms, "mahler", [&] {
      const std::uint64_t points = std::min<std::uint64_t>(std::uint64_t{1} << k, kMaxMahlerPoints);
      return check_ergodicity_mahler(mahler_prefix(f, k, points));
    });
  }
  if (o.oracle) a.oracle = timed(a.timing_ms, "oracle", [&] { return transitive_mod(f, k); });
  a.counters["table"] = table_counters(table);
  reconcile(a);
  return a;
}

void require_bits(unsigned bits) {
  const unsigned cap = max_bits_from_env();
  if (bits == 0 || bits > cap) {
    throw CapExceeded("precision k = " + std::to_string(bits) + " outside 1.." +
                      std::to_string(cap) + " (raise with TFA_MAX_BITS)");
  }
}

nlohmann::json verdict_json(Verdict v) {
  if (v == Verdict::unchecked) return nullptr;
  return verdict_name(v);
}

}  // namespace

unsigned max_bits_from_env() {
  const unsigned hard = std::min(kMaxTableBits, kMaxOracleBits);
  const char* env = std::getenv("TFA_MAX_BITS");
  if (env == nullptr || *env == '\0') return kDefaultMaxBits;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0) throw DomainError("TFA_MAX_BITS must be a positive integer");
  return static_cast<unsigned>(std::min<unsigned long>(v, hard));
}

std::vector<Family> parse_families(const std::string& list) {
  std::vector<Family> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "vdp") {
      out.push_back(Family::van_der_put);
    } else if (item == "anf") {
      out.push_back(Family::anf);
    } else if (item == "mahler") {
      out.push_back(Family::mahler);
    } else {
      throw DomainError("unknown criteria family '" + item + "' (expected vdp, anf, mahler)");
    }
  }
  if (out.empty()) throw DomainError("no criteria family selected");
  return out;
}

Analysis analyze_expression(const Expr& e, const std::string& text, const AnalysisOptions& o) {
  require_bits(o.bits);
  if (o.bits > e.max_bits()) {
    throw DomainError("expression is defined up to k = " + std::to_string(e.max_bits()));
  }
  Analysis a;
  a.input = text;
  a.bits = o.bits;
  a.from_expression = true;
  auto values = tabulate(e.at(o.bits), o.bits);
  const VdpTable table = VdpTable::from_values(values, o.bits);
  a.counters["direct_operators"] = e.operator_count();
  return run(from_values(std::move(values), o.bits), table, std::move(a), o);
}

Analysis analyze_table(const VdpTable& t, const std::string& label, const AnalysisOptions& o) {
  if (t.bits() != o.bits) {
    throw PrecisionMismatch("table has k = " + std::to_string(t.bits()) + ", asked for k = " +
                            std::to_string(o.bits));
  }
  require_bits(o.bits);
  Analysis a;
  a.input = label;
  a.bits = o.bits;
  return run(from_values(tabulate(t.as_function(), o.bits), o.bits), t, std::move(a), o);
}

std::vector<std::string> prediction_mismatches(const GalleryEntry& entry, const Analysis& a) {
  std::vector<std::string> out;
  const auto p = entry.predict(a.bits);
  if (!p) return out;
  auto check = [&](const char* property, const std::optional<bool>& want, const char* source,
                   Verdict got) {
    if (!want || (got != Verdict::pass && got != Verdict::fail)) return;
    if ((got == Verdict::pass) != *want) {
      out.push_back(entry.name + " " + entry.parameters + ": " + source + " finds " + property +
                    " = " + verdict_name(got) + ", contradicting: " + entry.claim);
    }
  };
  auto check_bool = [&](const char* property, const std::optional<bool>& want,
                        const char* source, bool got) {
    check(property, want, source, got ? Verdict::pass : Verdict::fail);
  };
  for (const auto* r : {&a.vdp, &a.anf}) {
    if (!*r) continue;
    const auto source = std::string(to_string((*r)->family));
    check("measure-preserving", p->measure_preserving, source.c_str(), (*r)->measure_preserving);
    check("ergodic", p->ergodic, source.c_str(), (*r)->ergodic);
  }
  if (a.mahler) {
    // A refutation contradicts a positive prediction.
    if (p->measure_preserving.value_or(false) && a.mahler->measure_preserving == Verdict::fail) {
      check("measure-preserving", p->measure_preserving, "mahler", Verdict::fail);
    }
    if (p->ergodic.value_or(false) && a.mahler->ergodic == Verdict::fail) {
      check("ergodic", p->ergodic, "mahler", Verdict::fail);
    }
  }
  if (a.oracle) {
    check_bool("measure-preserving", p->measure_preserving, "oracle", a.oracle->bijective);
    check_bool("ergodic", p->ergodic, "oracle", a.oracle->transitive);
  }
  return out;
}

nlohmann::json to_json(const CriteriaReport& r) {
  nlohmann::json evidence = nlohmann::json::array();
  for (const auto& e : r.evidence) {
    nlohmann::json item = {{"condition", e.condition},
                           {"level", e.level},
                           {"index", e.index},
                           {"outcome", std::string(to_string(e.outcome))}};
    if (e.value) item["value"] = *e.value;
    evidence.push_back(std::move(item));
  }
  nlohmann::json j = {{"family", std::string(to_string(r.family))},
                      {"bits", r.bits},
                      {"certified_up_to", r.certified_up_to},
                      {"compatible", verdict_json(r.compatible)},
                      {"measure_preserving", verdict_json(r.measure_preserving)},
                      {"ergodic", verdict_json(r.ergodic)},
                      {"evidence", std::move(evidence)}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::json to_json(const OracleResult& r) {
  nlohmann::json j = {{"modulus_bits", r.modulus_bits},
                      {"bijective", r.bijective},
                      {"transitive", r.transitive}};
  j["collision"] = r.collision ? nlohmann::json{r.collision->first, r.collision->second}
                               : nlohmann::json(nullptr);
  j["cycle_length"] = r.cycle_length ? nlohmann::json(*r.cycle_length) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const Analysis& a, bool with_timing) {
  nlohmann::json j;
  j[a.from_expression ? "expression" : "table"] = a.input;
  j["bits"] = a.bits;
  nlohmann::json families = nlohmann::json::object();
  if (a.vdp) families["vdp"] = to_json(*a.vdp);
  if (a.anf) families["anf"] = to_json(*a.anf);
  if (a.mahler) families["mahler"] = to_json(*a.mahler);
  j["families"] = std::move(families);
  j["oracle"] = a.oracle ? to_json(*a.oracle) : nlohmann::json(nullptr);
  j["agreement"] = a.agreement();
  j["disagreements"] = a.disagreements;
  if (!a.skipped.empty()) j["comparison_skipped"] = a.skipped;
  j["counters"] = a.counters;
  if (with_timing) j["timing_ms"] = a.timing_ms;
  return j;
}

}  // namespace tfa::tools
