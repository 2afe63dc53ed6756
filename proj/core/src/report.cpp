#include "tfa/report.hpp"

#include <algorithm>

namespace tfa {

bool CriteriaReport::monotone() const {
  auto implies = [](Verdict stronger, Verdict weaker) {
    const bool positive = stronger == Verdict::pass || stronger == Verdict::consistent;
    return !positive || weaker != Verdict::fail;
  };
  return implies(ergodic, measure_preserving) && implies(measure_preserving, compatible);
}

const Evidence* CriteriaReport::first_failure() const {
  const auto it = std::find_if(evidence.begin(), evidence.end(),
                               [](const Evidence& e) { return e.outcome == Outcome::fail; });
  return it == evidence.end() ? nullptr : &*it;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::van_der_put: return "vdp";
    case Family::anf: return "anf";
    case Family::mahler: return "mahler";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::unchecked: return "unchecked";
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::consistent: return "consistent";
  }
  return "?";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::undecidable: return "undecidable";
  }
  return "?";
}

}  // namespace tfa
