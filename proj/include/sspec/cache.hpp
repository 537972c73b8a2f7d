#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sspec/config.hpp"
#include "sspec/order_kernel.hpp"

namespace sspec {

using Digest = std::array<std::uint8_t, 32>;

// On-disk layout (all integers little-endian):
//   "SSPEC1" | u32 len, version | 32-byte digest | u64 count | records
struct CacheEntry {
    Digest digest{};
    std::string version;
    std::vector<GroupRecord> records;

    bool operator==(const CacheEntry&) const = default;
};

inline constexpr std::string_view kCacheMagic = "SSPEC1";

// SHA-256 over the sorted prime list, tool version and every option that
// can change the result.
Digest cache_digest(const PrimeSet& pi, const EnumerateOptions& options, std::string_view version = kToolVersion);

std::string to_hex(const Digest& d);

// Throws std::runtime_error on I/O failure.
void write_cache(const std::filesystem::path& path, const CacheEntry& entry);

// nullopt when the file is missing, unreadable, malformed or carries a
// different digest; the reason is written to `warn` unless the file is
// simply absent.
std::optional<CacheEntry> read_cache(const std::filesystem::path& path, const Digest& expected, std::ostream& warn);

// Writes the records for this configuration and reads them back.
CacheEntry cache_roundtrip(const std::vector<GroupRecord>& records, const PrimeSet& pi, const RunConfig& config,
                           const std::filesystem::path& path);

}  // namespace sspec
