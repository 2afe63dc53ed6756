#pragma once

// Coefficient table files.
//
// VDPT binary: the bytes "VDPT", a version byte (1), a byte k, then 2^k
// little-endian 64-bit coefficients, each < 2^k.
// JSON: {"bits": k, "coeffs": [B_0, ..., B_{2^k - 1}]}.

#include <filesystem>
#include <string>
#include <string_view>

#include "tfa/vdp.hpp"

namespace tfa {

inline constexpr std::uint8_t kVdptVersion = 1;

std::string to_vdpt(const VdpTable& t);
VdpTable from_vdpt(std::string_view bytes);

std::string to_json(const VdpTable& t);
VdpTable from_json(std::string_view text);

/// Reads either format, detected by the magic bytes.
VdpTable read_table(const std::filesystem::path& path);
void write_vdpt(const VdpTable& t, const std::filesystem::path& path);
void write_json(const VdpTable& t, const std::filesystem::path& path);

}  // namespace tfa
