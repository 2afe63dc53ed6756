#pragma once

// Runs the criteria families and the oracle on one function and decides
// whether their verdicts agree. Shared by the tfa CLI and the tests.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tfa/expr.hpp"
#include "tfa/gallery.hpp"
#include "tfa/oracle.hpp"
#include "tfa/report.hpp"
#include "tfa/vdp.hpp"

namespace tfa::tools {

/// Default precision cap for CLI commands; TFA_MAX_BITS replaces it, up to
/// the hard limit of the table and oracle code.
inline constexpr unsigned kDefaultMaxBits = 20;
unsigned max_bits_from_env();

std::vector<Family> parse_families(const std::string& list);

struct AnalysisOptions {
  unsigned bits = 0;
  bool oracle = false;
  std::vector<Family> families{Family::van_der_put, Family::anf, Family::mahler};
};

struct Analysis {
  std::string input;  // expression text or table file name
  unsigned bits = 0;
  bool from_expression = false;
  Verdict compatible = Verdict::unchecked;  // gate for every comparison
  std::optional<CriteriaReport> vdp;
  std::optional<CriteriaReport> anf;
  std::optional<CriteriaReport> mahler;
  std::optional<OracleResult> oracle;
  std::vector<std::string> disagreements;
  std::string skipped;  // why no comparison ran, if none did
  nlohmann::json timing_ms = nlohmann::json::object();
  nlohmann::json counters = nlohmann::json::object();

  bool agreement() const { return disagreements.empty(); }
};

Analysis analyze_expression(const Expr& e, const std::string& text, const AnalysisOptions& o);
Analysis analyze_table(const VdpTable& t, const std::string& label, const AnalysisOptions& o);

/// Verdicts of the gallery entry's law that the analysis contradicts.
std::vector<std::string> prediction_mismatches(const GalleryEntry& entry, const Analysis& a);

nlohmann::json to_json(const CriteriaReport& r);
nlohmann::json to_json(const OracleResult& r);
nlohmann::json to_json(const Analysis& a, bool with_timing = true);

}  // namespace tfa::tools
