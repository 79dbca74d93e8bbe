// Copyright 2026 The addrtag Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace addrtag {

// 64-bit FNV-1a; used for corpus and input-file fingerprints.
std::uint64_t fnv1a64(std::string_view data) noexcept;
std::string fingerprint_hex(std::string_view data);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

std::string trim(std::string_view s);

// Shortest round-trip decimal form of a double (plain "0", "-1.25", ...).
std::string format_double(double value);
double parse_double(std::string_view s);

}  // namespace addrtag
