// Acceptance suite: one PASS/FAIL line per criterion. Every check is an
// exact comparison (counts and verdicts), so no tolerances apply.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "random_expr.hpp"
#include "tfa/anf.hpp"
#include "tfa/expr.hpp"
#include "tfa/gallery.hpp"
#include "tfa/latin.hpp"
#include "tfa/mahler.hpp"
#include "tfa/oracle.hpp"
#include "tfa/vdp.hpp"

namespace {

using namespace tfa;

constexpr std::uint64_t kCorpusSeed = 20261015;
constexpr std::size_t kRandomExpressions = 1000;
constexpr unsigned kSweepBits = 14;

struct Result {
  bool pass = false;
  std::string detail;
};

struct CorpusItem {
  std::string label;
  Expr expr;
  const GalleryEntry* entry = nullptr;
};

std::vector<GalleryEntry>& gallery() {
  static std::vector<GalleryEntry> g = default_gallery(kSweepBits);
  return g;
}

std::vector<CorpusItem>& corpus() {
  static std::vector<CorpusItem> items = [] {
    std::vector<CorpusItem> out;
    for (const auto& e : gallery()) out.push_back({e.name + " " + e.parameters, e.expr, &e});
    for (const auto& s : tfa::testing::random_corpus(kCorpusSeed, kRandomExpressions)) {
      out.push_back({s, Expr::parse(s), nullptr});
    }
    return out;
  }();
  return items;
}

// f mod 2^k from a table of f mod 2^top; exact because f is a T-function.
WordFunction restrict_to(const std::vector<std::uint64_t>& top, unsigned k) {
  std::vector<std::uint64_t> v(top.begin(), top.begin() + (std::ptrdiff_t{1} << k));
  return from_values(std::move(v), k);
}

std::string first(const std::vector<std::string>& problems) {
  return problems.empty() ? "" : "; first: " + problems.front();
}

Result three_way_agreement() {
  std::uint64_t checks = 0;
  std::uint64_t positives_mp = 0;
  std::uint64_t positives_erg = 0;
  std::vector<std::string> problems;
  for (const auto& item : corpus()) {
    const auto top = tabulate(item.expr.at(kSweepBits), kSweepBits);
    for (unsigned k = 1; k <= kSweepBits; ++k) {
      const WordFunction f = restrict_to(top, k);
      const VdpTable t = VdpTable::from_values(top, k);
      const OracleResult o = transitive_mod(f, k);
      const CriteriaReport vdp = k >= 3 ? check_ergodicity(t) : check_measure_preservation(t);
      const CriteriaReport anf = check_ergodicity_anf(f, k);
      auto note = [&](const std::string& what) {
        problems.push_back(item.label + " k=" + std::to_string(k) + ": " + what);
      };
      ++checks;
      positives_mp += o.bijective;
      positives_erg += o.transitive;
      if (vdp.compatible != Verdict::pass) note("vdp says not compatible");
      if ((vdp.measure_preserving == Verdict::pass) != o.bijective) note("vdp bijectivity");
      if ((anf.measure_preserving == Verdict::pass) != o.bijective) note("anf bijectivity");
      if (k >= 3 && (vdp.ergodic == Verdict::pass) != o.transitive) note("vdp transitivity");
      if ((anf.ergodic == Verdict::pass) != o.transitive) note("anf transitivity");
      if (k >= 3 && ergodic_by_level_sums(t) != o.transitive) note("level-sum form");
      if (item.entry != nullptr) {
        if (const auto p = item.entry->predict(k)) {
          if (p->measure_preserving && *p->measure_preserving != o.bijective) note("predicted bijectivity: " + item.entry->claim);
          if (p->ergodic && *p->ergodic != o.transitive) note("predicted transitivity: " + item.entry->claim);
        }
      }
    }
  }
  std::ostringstream d;
  d << corpus().size() << " functions x k=1.." << kSweepBits << " = " << checks
    << " (function, k) pairs; bijective " << positives_mp << ", transitive " << positives_erg
    << "; disagreements " << problems.size() << first(problems);
  return {problems.empty() && positives_erg > 0, d.str()};
}

Result klimov_shamir_law() {
  std::uint64_t ergodic = 0;
  std::vector<std::string> problems;
  for (std::uint64_t c = 0; c < 256; ++c) {
    const bool transitive = transitive_mod(klimov_shamir(c).expr.at(12), 12).transitive;
    ergodic += transitive;
    if (transitive != (c % 8 == 5 || c % 8 == 7)) problems.push_back("C=" + std::to_string(c));
  }
  return {problems.empty(), "256 constants at k=12; transitive for " + std::to_string(ergodic) +
                                ", mismatches " + std::to_string(problems.size()) + first(problems)};
}

Result add_xor_law() {
  std::mt19937_64 rng(kCorpusSeed + 3);
  std::uint64_t transitive = 0;
  std::vector<std::string> problems;
  const int lists = 200;
  for (int t = 0; t < lists; ++t) {
    const std::size_t len = 1 + rng() % 8;
    std::vector<std::uint64_t> c(len);
    std::vector<std::uint64_t> d(len);
    for (auto& v : c) v = rng() % (1 << 20);
    for (auto& v : d) v = rng() % (1 << 20);
    const GalleryEntry e = add_xor(c, d);
    const bool at14 = transitive_mod(e.expr.at(14), 14).transitive;
    const bool at2 = transitive_mod(e.expr.at(2), 2).transitive;
    transitive += at14;
    if (at14 != at2 || at2 != add_xor_transitive_mod4(c, d)) problems.push_back(e.parameters);
  }
  return {problems.empty(), std::to_string(lists) + " lists of length 1..8; transitive mod 2^14: " +
                                std::to_string(transitive) + ", mismatches " +
                                std::to_string(problems.size()) + first(problems)};
}

Result masked_sum_law() {
  // Each parity condition is drawn to hold with high probability so that
  // both outcomes occur often.
  std::mt19937_64 rng(kCorpusSeed + 4);
  std::bernoulli_distribution mostly(0.93);
  const unsigned k = 12;
  std::uint64_t ergodic = 0;
  std::vector<std::string> problems;
  const int trials = 500;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t c = (rng() % 4096 & ~std::uint64_t{1}) | (mostly(rng) ? 1 : 0);
    std::vector<std::uint64_t> d(k);
    d[0] = (rng() % 1024) * 4 + (mostly(rng) ? 1 : 3);
    if (!mostly(rng)) d[0] = rng() % 4096;
    for (unsigned i = 1; i < k; ++i) d[i] = ((rng() % 4096) & ~std::uint64_t{1}) | (mostly(rng) ? 1 : 0);
    bool predicted = c % 2 == 1 && d[0] % 4 == 1;
    for (unsigned i = 1; i < k; ++i) predicted = predicted && d[i] % 2 == 1;
    const bool transitive = transitive_mod(masked_sum(c, d).expr.at(k), k).transitive;
    ergodic += transitive;
    if (transitive != predicted) problems.push_back(masked_sum(c, d).parameters);
  }
  return {problems.empty(), std::to_string(trials) + " draws at k=12; transitive " +
                                std::to_string(ergodic) + ", mismatches " +
                                std::to_string(problems.size()) + first(problems)};
}

Result prefix_weighted_mask_example() {
  const unsigned k = 14;
  const GalleryEntry e = prefix_weighted_mask(k);
  const bool transitive = transitive_mod(e.expr.at(k), k).transitive;
  const VdpTable t = VdpTable::from_function(e.expr.at(k), k);
  const bool criteria = check_ergodicity(t).ergodic == Verdict::pass;
  const bool coefficients = t[0] == 1 && t[1] == 2 && t[2] == 6 && t[3] == 6;
  std::ostringstream d;
  d << "transitive mod 2^14: " << transitive << ", criteria ergodic: " << criteria << ", B0..B3 = "
    << t[0] << "," << t[1] << "," << t[2] << "," << t[3];
  return {transitive && criteria && coefficients, d.str()};
}

Result knapsack_exact() {
  std::uint64_t evaluations = 0;
  std::vector<std::string> problems;
  for (const auto& item : corpus()) {
    for (unsigned k = 1; k <= 12; ++k) {
      const VdpTable t = VdpTable::from_function(item.expr.at(k), k);
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
        EvalCounters c;
        const std::uint64_t v = t.evaluate(x, c);
        ++evaluations;
        if (v != item.expr.evaluate(x, k)) {
          problems.push_back(item.label + " k=" + std::to_string(k) + " x=" + std::to_string(x));
        }
        if (c.loads > k || c.adds + 1 > k) {
          problems.push_back(item.label + ": counters over budget at x=" + std::to_string(x));
        }
      }
    }
  }
  return {problems.empty(), std::to_string(evaluations) + " evaluations over " +
                                std::to_string(corpus().size()) + " functions, k=1..12; failures " +
                                std::to_string(problems.size()) + first(problems)};
}

Result constructor_guarantees() {
  std::mt19937_64 rng(kCorpusSeed + 7);
  const unsigned k = 12;
  std::vector<std::string> problems;
  std::uint64_t checked = 0;
  for (int t = 0; t < 100; ++t) {
    const Expr g = Expr::parse(tfa::testing::random_expression(rng, 1 + rng() % 4));
    const auto delta = delta_constructors(g, rng() % 16);
    if (!bijective_mod(delta[0].expr.at(k), k).bijective) problems.push_back(delta[0].parameters);
    if (!transitive_mod(delta[1].expr.at(k), k).transitive) problems.push_back(delta[1].parameters);
    const Expr h = Expr::parse(tfa::testing::random_expression(rng, 1 + rng() % 3));
    for (const auto& e : comp_bool_constructors(delta[1].expr, h)) {
      if (!transitive_mod(e.expr.at(k), k).transitive) problems.push_back(e.name + " " + e.parameters);
    }
    checked += 6;
  }
  return {problems.empty(), "100 random g at k=12: " + std::to_string(checked) +
                                " constructed functions; failures " +
                                std::to_string(problems.size()) + first(problems)};
}

Result mahler_fail_soundness() {
  std::uint64_t refutations = 0;
  std::uint64_t reports = 0;
  std::vector<std::string> problems;
  for (const auto& item : corpus()) {
    for (unsigned k = 1; k <= 12; ++k) {
      const WordFunction f = item.expr.at(k);
      const MahlerPrefix p = mahler_prefix(f, k, std::uint64_t{1} << k);
      const CriteriaReport r = check_ergodicity_mahler(p);
      const OracleResult o = transitive_mod(f, k);
      ++reports;
      auto note = [&](const std::string& what) {
        problems.push_back(item.label + " k=" + std::to_string(k) + ": " + what);
      };
      if (r.compatible == Verdict::fail) note("refutes compatibility of a T-function");
      if (r.measure_preserving == Verdict::fail) {
        ++refutations;
        if (o.bijective) note("refutes bijectivity, oracle confirms it");
      }
      if (r.ergodic == Verdict::fail) {
        ++refutations;
        if (o.transitive) note("refutes transitivity, oracle confirms it");
      }
    }
  }
  return {problems.empty(), std::to_string(reports) + " reports (N = 2^k <= 4096), " +
                                std::to_string(refutations) + " refutations; unsound " +
                                std::to_string(problems.size()) + first(problems)};
}

Result latin_squares() {
  std::vector<std::string> problems;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const LatinSquareSpec s = random_latin_spec(8, kCorpusSeed + seed);
    if (const auto v = verify_latin(s)) {
      problems.push_back("seed " + std::to_string(seed) + (v->in_row ? " row " : " column ") +
                         std::to_string(v->line));
    }
    const auto m = latin_matrix(s);
    for (std::uint64_t a = 0; a < 256; ++a) {
      for (std::uint64_t b = 0; b < 256; ++b) {
        if (latin_entry(s, a, b) != m[a * 256 + b]) {
          problems.push_back("seed " + std::to_string(seed) + " entry mismatch");
          a = 256;
          break;
        }
      }
    }
  }
  return {problems.empty(), "100 specs at l=8, 256x256 each; failures " +
                                std::to_string(problems.size()) + first(problems)};
}

Result table_cost() {
  std::vector<std::string> problems;
  // Worst case (all-ones input) costs exactly k loads and k-1 adds, and no
  // input costs more: the cost is linear in k.
  for (unsigned k = 1; k <= 20; ++k) {
    std::vector<std::uint64_t> zeros(std::size_t{1} << k, 0);
    const VdpTable t(k, std::move(zeros));
    EvalCounters worst;
    t.evaluate(low_mask(k), worst);
    if (worst.loads != k || worst.adds != k - 1 || worst.masks != k || worst.compares != k) {
      problems.push_back("k=" + std::to_string(k) + " worst case off");
    }
    std::mt19937_64 rng(k);
    for (int i = 0; i < 1000; ++i) {
      EvalCounters c;
      t.evaluate(rng() & low_mask(k), c);
      if (c.loads > k || c.adds > k - 1) problems.push_back("k=" + std::to_string(k) + " over budget");
    }
  }
  std::string s = "x";
  for (int i = 0; i < 32; ++i) {
    s = "((" + s + " + " + std::to_string(2 * i + 1) + ") ^ " + std::to_string(3 * i + 2) + ")";
  }
  const Expr deep = Expr::parse(s);
  const unsigned k = 16;
  const VdpTable t = VdpTable::from_function(deep.at(k), k);
  std::uint64_t worst_arith = 0;
  std::uint64_t worst_with_loads = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
    EvalCounters c;
    t.evaluate(x, c);
    worst_arith = std::max(worst_arith, c.arithmetic());
    worst_with_loads = std::max(worst_with_loads, c.arithmetic() + c.loads);
  }
  const std::size_t direct = deep.operator_count();
  if (worst_arith >= direct) problems.push_back("table not cheaper than direct");
  std::ostringstream d;
  d << "k=1..20 worst case loads=k adds=k-1; 32-round add-xor at k=16: direct " << direct
    << " ops/eval, table worst " << worst_arith << " arithmetic ops (" << worst_with_loads
    << " counting loads); failures " << problems.size() << first(problems);
  return {problems.empty(), d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "three-way agreement vdp/anf/oracle, k<=14", three_way_agreement},
      {"AC2", "Klimov-Shamir law, C<256, k=12", klimov_shamir_law},
      {"AC3", "add-xor transitive mod 2^14 iff mod 4", add_xor_law},
      {"AC4", "masked-sum ergodicity conditions, k=12", masked_sum_law},
      {"AC5", "prefix-weighted-mask ergodic, B0..B3 = 1,2,6,6", prefix_weighted_mask_example},
      {"AC6", "knapsack evaluator exact within k loads, k-1 adds", knapsack_exact},
      {"AC7", "delta and comp-bool constructor guarantees, k=12", constructor_guarantees},
      {"AC8", "Mahler refutations are oracle-confirmed", mahler_fail_soundness},
      {"AC9", "random Latin squares, l=8", latin_squares},
      {"AC10", "table cost linear in k, cheaper than 32-round add-xor", table_cost},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s: %s (%s) [%.1fs]\n", c.id, c.name, r.pass ? "PASS" : "FAIL", r.detail.c_str(), secs);
    std::fflush(stdout);
    failed += r.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
