#include "tfa/anf.hpp"

#include <string>

namespace tfa {
namespace {

void require_bits(unsigned bits) {
  if (bits == 0 || bits > kMaxAnfBits) {
    throw CapExceeded("coordinate analysis supports 1 <= k <= " + std::to_string(kMaxAnfBits));
  }
}

CriteriaReport linearity(const WordFunction& f, unsigned bits,
                         std::vector<CoordinateTable>& coords) {
  CriteriaReport r;
  r.family = Family::anf;
  r.bits = bits;
  r.certified_up_to = bits;
  // Every T-function expression or table handed in is compatible by
  // construction; this family does not test it.
  r.compatible = Verdict::unchecked;
  bool ok = true;
  for (unsigned j = 0; j < bits; ++j) {
    coords.push_back(coordinate(f, j));
    const auto& truth = coords.back().truth;
    const std::uint64_t half = std::uint64_t{1} << j;
    Evidence e{"psi_j linear in chi_j", j, 0, Outcome::pass, std::nullopt};
    for (std::uint64_t p = 0; p < half; ++p) {
      if (truth[p] == truth[p + half]) {
        e = {"psi_j linear in chi_j", j, p, Outcome::fail, std::uint64_t{truth[p]}};
        ok = false;
        break;
      }
    }
    r.evidence.push_back(e);
  }
  r.measure_preserving = ok ? Verdict::pass : Verdict::fail;
  return r;
}

}  // namespace

std::uint64_t CoordinateTable::phi_weight() const {
  const std::uint64_t half = std::uint64_t{1} << j;
  std::uint64_t w = 0;
  for (std::uint64_t p = 0; p < half; ++p) w += truth[p] ? 1 : 0;
  return w;
}

CoordinateTable coordinate(const WordFunction& f, unsigned j) {
  require_bits(j + 1);
  CoordinateTable t;
  t.j = j;
  const std::uint64_t n = std::uint64_t{1} << (j + 1);
  t.truth.resize(n);
  for (std::uint64_t x = 0; x < n; ++x) t.truth[x] = ((f(x) >> j) & 1) != 0;
  return t;
}

CriteriaReport check_measure_preservation_anf(const WordFunction& f, unsigned bits) {
  require_bits(bits);
  std::vector<CoordinateTable> coords;
  return linearity(f, bits, coords);
}

CriteriaReport check_ergodicity_anf(const WordFunction& f, unsigned bits) {
  require_bits(bits);
  std::vector<CoordinateTable> coords;
  CriteriaReport r = linearity(f, bits, coords);
  if (r.measure_preserving != Verdict::pass) {
    r.ergodic = Verdict::fail;
    r.note = "not-measure-preserving";
    return r;
  }
  bool ok = coords[0].truth[0] && !coords[0].truth[1];
  r.evidence.push_back({"psi_0 = chi_0 xor 1", 0, coords[0].truth[0] ? 1u : 0u,
                        ok ? Outcome::pass : Outcome::fail, std::nullopt});
  for (unsigned j = 1; j < bits; ++j) {
    const std::uint64_t w = coords[j].phi_weight();
    const bool odd = (w & 1) == 1;
    r.evidence.push_back({"phi_j odd weight", j, j, odd ? Outcome::pass : Outcome::fail, w});
    ok = ok && odd;
  }
  r.ergodic = ok ? Verdict::pass : Verdict::fail;
  return r;
}

}  // namespace tfa
