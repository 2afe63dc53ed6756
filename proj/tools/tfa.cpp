// tfa: analyze, tabulate and evaluate T-functions from the command line.
//
// Exit codes: 0 success (and agreement), 1 input error, 2 disagreement
// between criteria families or between table and direct evaluation.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>

#include <CLI11.hpp>

#include "analysis.hpp"
#include "tfa/gallery.hpp"
#include "tfa/latin.hpp"
#include "tfa/vdp_io.hpp"

namespace {

using nlohmann::json;
using namespace tfa;
using namespace tfa::tools;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kDisagreement = 2;

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

struct AnalyzeArgs {
  std::string expr;
  std::string coeffs;
  unsigned bits = 0;
  bool oracle = false;
  std::string families = "vdp,anf,mahler";
  bool no_timing = false;
};

int run_analyze(const AnalyzeArgs& args) {
  AnalysisOptions o;
  o.oracle = args.oracle;
  o.families = parse_families(args.families);
  Analysis a;
  if (!args.expr.empty()) {
    if (args.bits == 0) throw DomainError("--bits is required with --expr");
    o.bits = args.bits;
    a = analyze_expression(Expr::parse(args.expr), args.expr, o);
  } else {
    const VdpTable t = read_table(args.coeffs);
    o.bits = args.bits == 0 ? t.bits() : args.bits;
    a = analyze_table(t, args.coeffs, o);
  }
  print(to_json(a, !args.no_timing));
  return a.agreement() ? kOk : kDisagreement;
}

struct CoeffsArgs {
  std::string expr;
  unsigned bits = 0;
  std::string format = "json";
  std::string out;
};

int run_coeffs(const CoeffsArgs& args) {
  if (args.bits > max_bits_from_env()) throw CapExceeded("precision above TFA_MAX_BITS");
  const VdpTable t = VdpTable::from_function(Expr::parse(args.expr).at(args.bits), args.bits);
  if (args.format == "vdpt") {
    if (args.out.empty()) throw DomainError("--format vdpt needs --out FILE");
    write_vdpt(t, args.out);
  } else if (args.out.empty()) {
    std::cout << to_json(t) << '\n';
  } else {
    write_json(t, args.out);
  }
  return kOk;
}

struct EvalArgs {
  std::string expr;
  std::string table;
  unsigned bits = 0;
  std::uint64_t x = 0;
};

int run_eval(const EvalArgs& args) {
  std::optional<Expr> e;
  std::optional<VdpTable> t;
  if (!args.table.empty()) t = read_table(args.table);
  if (!args.expr.empty()) e = Expr::parse(args.expr);
  const unsigned k = args.bits != 0 ? args.bits : (t ? t->bits() : 0);
  if (k == 0) throw DomainError("--bits is required with --expr");
  if (k > max_bits_from_env()) throw CapExceeded("precision above TFA_MAX_BITS");
  if (t && t->bits() != k) throw PrecisionMismatch("table precision differs from --bits");
  if (!t) t = VdpTable::from_function(e->at(k), k);
  const Word x(args.x, k);
  std::cout << "x = " << x.value() << " (k = " << k << ")\n";
  std::optional<std::uint64_t> direct;
  if (e) {
    direct = e->evaluate(x.value(), k);
    std::cout << "direct: " << *direct << " (operators: " << e->operator_count() << ")\n";
  }
  EvalCounters c;
  const std::uint64_t table = t->evaluate(x.value(), c);
  std::cout << "table:  " << table << " (loads: " << c.loads << ", adds: " << c.adds
            << ", masks: " << c.masks << ", compares: " << c.compares << ")\n";
  if (direct && *direct != table) {
    std::cout << "MISMATCH\n";
    return kDisagreement;
  }
  return kOk;
}

struct LatinArgs {
  unsigned bits = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::vector<std::uint64_t> query;
};

int run_latin(const LatinArgs& args) {
  if (args.bits > max_bits_from_env()) throw CapExceeded("order above TFA_MAX_BITS");
  const LatinSquareSpec s = random_latin_spec(args.bits, args.seed);
  if (!args.query.empty()) {
    EvalCounters c;
    const std::uint64_t v = latin_entry(s, args.query[0], args.query[1], c);
    print({{"a", args.query[0]},
           {"b", args.query[1]},
           {"entry", v},
           {"loads", c.loads},
           {"adds", c.adds}});
    return kOk;
  }
  json summary = {{"bits", args.bits}, {"seed", args.seed}};
  if (args.bits <= kMaxLatinVerifyBits) {
    const auto v = verify_latin(s);
    summary["latin"] = !v.has_value();
    if (v) {
      summary["violation"] = {{"line", v->in_row ? "row" : "column"},
                              {"index", v->line},
                              {"positions", {v->first, v->second}}};
    }
  } else {
    summary["latin"] = nullptr;
  }
  if (!args.out.empty()) {
    std::ofstream csv(args.out);
    if (!csv) throw DomainError("cannot write " + args.out);
    write_latin_csv(csv, s);
    write_vdpt(s.tx, args.out + ".tx.vdpt");
    write_vdpt(s.ty, args.out + ".ty.vdpt");
    summary["files"] = {args.out, args.out + ".tx.vdpt", args.out + ".ty.vdpt"};
  }
  print(summary);
  return summary["latin"] == false ? kDisagreement : kOk;
}

struct BenchArgs {
  std::string expr;
  unsigned bits = 0;
  std::uint64_t seed = 0;
  std::uint64_t count = 100000;
};

int run_bench(const BenchArgs& args) {
  if (args.bits > max_bits_from_env()) throw CapExceeded("precision above TFA_MAX_BITS");
  if (args.count == 0) throw DomainError("--count must be positive");
  const Expr e = Expr::parse(args.expr);
  const unsigned k = args.bits;
  const VdpTable t = VdpTable::from_function(e.at(k), k);
  std::mt19937_64 rng(args.seed);
  std::vector<std::uint64_t> xs(args.count);
  for (auto& x : xs) x = rng() & low_mask(k);

  using Clock = std::chrono::steady_clock;
  std::uint64_t sink = 0;
  auto start = Clock::now();
  for (const auto x : xs) sink += e.evaluate(x, k);
  const double direct_ns =
      std::chrono::duration<double, std::nano>(Clock::now() - start).count() / xs.size();
  start = Clock::now();
  for (const auto x : xs) sink -= t.evaluate(x);
  const double table_ns =
      std::chrono::duration<double, std::nano>(Clock::now() - start).count() / xs.size();

  std::map<std::uint64_t, std::uint64_t> loads;
  std::map<std::uint64_t, std::uint64_t> adds;
  EvalCounters total;
  for (const auto x : xs) {
    EvalCounters c;
    t.evaluate(x, c);
    ++loads[c.loads];
    ++adds[c.adds];
    total += c;
  }
  auto histogram = [](const std::map<std::uint64_t, std::uint64_t>& h) {
    json j = json::object();
    for (const auto& [value, n] : h) j[std::to_string(value)] = n;
    return j;
  };
  const double n = static_cast<double>(xs.size());
  print({{"expression", args.expr},
         {"bits", k},
         {"seed", args.seed},
         {"count", args.count},
         {"direct", {{"ns_per_op", direct_ns}, {"operators_per_eval", e.operator_count()}}},
         {"table",
          {{"ns_per_op", table_ns},
           {"mean_arithmetic_per_eval", static_cast<double>(total.arithmetic()) / n},
           {"mean_loads", static_cast<double>(total.loads) / n},
           {"mean_adds", static_cast<double>(total.adds) / n},
           {"loads_histogram", histogram(loads)},
           {"adds_histogram", histogram(adds)}}},
         {"checksum", sink}});
  return sink == 0 ? kOk : kDisagreement;
}

struct GalleryArgs {
  std::string name;
  std::vector<std::string> params;
  unsigned bits = 0;
  bool oracle = false;
  bool no_timing = false;
};

int run_gallery_list() {
  json list = json::array();
  for (const auto& f : gallery_families()) {
    list.push_back({{"name", f.name}, {"parameters", f.usage}, {"claim", f.claim}});
  }
  print(list);
  return kOk;
}

int run_gallery_analyze(const GalleryArgs& args) {
  GalleryParams params;
  for (const auto& p : args.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw DomainError("gallery parameter '" + p + "' is not NAME=VALUE");
    }
    params[p.substr(0, eq)] = p.substr(eq + 1);
  }
  const auto entries = gallery_family(args.name).build(params, args.bits);
  AnalysisOptions o;
  o.bits = args.bits;
  o.oracle = args.oracle;
  json out = json::array();
  bool ok = true;
  for (const auto& entry : entries) {
    const Analysis a = analyze_expression(entry.expr, entry.expr.to_string(), o);
    const auto mismatches = prediction_mismatches(entry, a);
    ok = ok && a.agreement() && mismatches.empty();
    json prediction = nullptr;
    if (const auto p = entry.predict(args.bits)) {
      prediction = {{"measure_preserving", p->measure_preserving ? json(*p->measure_preserving)
                                                                 : json(nullptr)},
                    {"ergodic", p->ergodic ? json(*p->ergodic) : json(nullptr)}};
    }
    out.push_back({{"name", entry.name},
                   {"parameters", entry.parameters},
                   {"claim", entry.claim},
                   {"prediction", prediction},
                   {"prediction_mismatches", mismatches},
                   {"analysis", to_json(a, !args.no_timing)}});
  }
  print(out);
  return ok ? kOk : kDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bijectivity and transitivity analysis of T-functions"};
  app.require_subcommand(1);
  std::function<int()> action;

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "Run the criteria families (and the oracle)");
  auto* an_expr = an->add_option("--expr", analyze.expr, "Expression in x");
  auto* an_coeffs = an->add_option("--coeffs", analyze.coeffs, "Coefficient table (VDPT or JSON)");
  an_expr->excludes(an_coeffs);
  an->add_option("--bits", analyze.bits, "Precision k");
  an->add_flag("--oracle", analyze.oracle, "Also run the exhaustive oracle");
  an->add_option("--families", analyze.families, "Comma-separated subset of vdp,anf,mahler");
  an->add_flag("--no-timing", analyze.no_timing, "Omit wall-clock timings");
  an->callback([&] {
    if (analyze.expr.empty() && analyze.coeffs.empty()) {
      throw CLI::ValidationError("analyze", "one of --expr or --coeffs is required");
    }
    action = [&] { return run_analyze(analyze); };
  });

  CoeffsArgs coeffs;
  auto* co = app.add_subcommand("coeffs", "Write the coefficient table of an expression");
  co->add_option("--expr", coeffs.expr, "Expression in x")->required();
  co->add_option("--bits", coeffs.bits, "Precision k")->required();
  co->add_option("--format", coeffs.format, "json or vdpt")
      ->check(CLI::IsMember({"json", "vdpt"}));
  co->add_option("--out", coeffs.out, "Output file (stdout for json if omitted)");
  co->callback([&] { action = [&] { return run_coeffs(coeffs); }; });

  EvalArgs eval;
  auto* ev = app.add_subcommand("eval", "Evaluate directly and through the coefficient table");
  ev->add_option("--expr", eval.expr, "Expression in x");
  ev->add_option("--table", eval.table, "Coefficient table file");
  ev->add_option("--bits", eval.bits, "Precision k");
  ev->add_option("--x", eval.x, "Input value")->required();
  ev->callback([&] {
    if (eval.expr.empty() && eval.table.empty()) {
      throw CLI::ValidationError("eval", "one of --expr or --table is required");
    }
    action = [&] { return run_eval(eval); };
  });

  LatinArgs latin;
  auto* la = app.add_subcommand("latin", "Random Latin square of order 2^bits");
  la->add_option("--bits", latin.bits, "Order exponent l")->required();
  la->add_option("--seed", latin.seed, "Generator seed")->required();
  auto* la_out = la->add_option("--out", latin.out, "CSV file; tables go to FILE.tx/ty.vdpt");
  la->add_option("--query", latin.query, "Print entry (a, b) only")
      ->expected(2)
      ->excludes(la_out);
  la->callback([&] { action = [&] { return run_latin(latin); }; });

  BenchArgs bench;
  auto* be = app.add_subcommand("bench", "Time direct versus table evaluation");
  be->add_option("--expr", bench.expr, "Expression in x")->required();
  be->add_option("--bits", bench.bits, "Precision k")->required();
  be->add_option("--seed", bench.seed, "Input generator seed")->required();
  be->add_option("--count", bench.count, "Number of random inputs");
  be->callback([&] { action = [&] { return run_bench(bench); }; });

  GalleryArgs gallery;
  auto* ga = app.add_subcommand("gallery", "Named T-function families");
  ga->require_subcommand(1);
  auto* gl = ga->add_subcommand("list", "List the families");
  gl->callback([&] { action = [] { return run_gallery_list(); }; });
  auto* gz = ga->add_subcommand("analyze", "Analyze a family member against its law");
  gz->add_option("name", gallery.name, "Family name")->required();
  gz->add_option("params", gallery.params, "NAME=VALUE parameters");
  gz->add_option("--bits", gallery.bits, "Precision k")->required();
  gz->add_flag("--oracle", gallery.oracle, "Also run the exhaustive oracle");
  gz->add_flag("--no-timing", gallery.no_timing, "Omit wall-clock timings");
  gz->callback([&] { action = [&] { return run_gallery_analyze(gallery); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
