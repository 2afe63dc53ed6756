#include "tfa/vdp_io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

namespace tfa {
namespace {

constexpr std::string_view kMagic = "VDPT";

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void dump(const std::string& bytes, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

void check_bits(unsigned bits) {
  if (bits == 0 || bits > kMaxTableBits) {
    throw FormatError("table precision " + std::to_string(bits) + " out of range");
  }
}

}  // namespace

std::string to_vdpt(const VdpTable& t) {
  std::string out;
  out.reserve(6 + 8 * t.size());
  out += kMagic;
  out += static_cast<char>(kVdptVersion);
  out += static_cast<char>(t.bits());
  for (const std::uint64_t c : t.coeffs()) {
    for (int i = 0; i < 8; ++i) out += static_cast<char>((c >> (8 * i)) & 0xff);
  }
  return out;
}

VdpTable from_vdpt(std::string_view bytes) {
  if (bytes.size() < 6 || bytes.substr(0, 4) != kMagic) throw FormatError("missing VDPT magic");
  const auto version = static_cast<std::uint8_t>(bytes[4]);
  if (version != kVdptVersion) {
    throw FormatError("unsupported VDPT version " + std::to_string(version));
  }
  const unsigned bits = static_cast<std::uint8_t>(bytes[5]);
  check_bits(bits);
  const std::size_t n = std::size_t{1} << bits;
  if (bytes.size() != 6 + 8 * n) {
    throw FormatError("VDPT body has " + std::to_string(bytes.size() - 6) + " bytes, expected " +
                      std::to_string(8 * n));
  }
  std::vector<std::uint64_t> coeffs(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::uint64_t c = 0;
    for (int i = 0; i < 8; ++i) {
      c |= std::uint64_t{static_cast<std::uint8_t>(bytes[6 + 8 * m + i])} << (8 * i);
    }
    if (c > low_mask(bits)) {
      throw FormatError("coefficient " + std::to_string(m) + " is not reduced mod 2^" +
                        std::to_string(bits));
    }
    coeffs[m] = c;
  }
  return VdpTable(bits, std::move(coeffs));
}

std::string to_json(const VdpTable& t) {
  nlohmann::json j;
  j["bits"] = t.bits();
  j["coeffs"] = std::vector<std::uint64_t>(t.coeffs().begin(), t.coeffs().end());
  return j.dump();
}

VdpTable from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("bits") || !j.contains("coeffs") ||
      !j["bits"].is_number_unsigned() || !j["coeffs"].is_array()) {
    throw FormatError(R"(expected {"bits": k, "coeffs": [...]})");
  }
  const unsigned bits = j["bits"].get<unsigned>();
  check_bits(bits);
  const auto& arr = j["coeffs"];
  if (arr.size() != (std::size_t{1} << bits)) throw FormatError("coeffs has the wrong length");
  std::vector<std::uint64_t> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() > low_mask(bits)) {
      throw FormatError("coefficients must be integers below 2^bits");
    }
    coeffs.push_back(v.get<std::uint64_t>());
  }
  return VdpTable(bits, std::move(coeffs));
}

VdpTable read_table(const std::filesystem::path& path) {
  const std::string bytes = slurp(path);
  if (bytes.substr(0, 4) == kMagic) return from_vdpt(bytes);
  return from_json(bytes);
}

void write_vdpt(const VdpTable& t, const std::filesystem::path& path) { dump(to_vdpt(t), path); }

void write_json(const VdpTable& t, const std::filesystem::path& path) { dump(to_json(t), path); }

}  // namespace tfa
