#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace dynred {

inline constexpr const char* kToolName = "dynred";
inline constexpr const char* kToolVersion = "0.1.0";

std::uint64_t fnv1a64(std::string_view data);

// 16 hex digits of the FNV-1a hash; the instance digest used in run reports.
std::string digest_hex(std::string_view data);

} // namespace dynred
