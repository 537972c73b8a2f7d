#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sspec/enumerator.hpp"
#include "sspec/prime_engine.hpp"

namespace sspec {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class ExitCode : int { Ok = 0, Usage = 2, Runtime = 3, Io = 4 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Text, Tsv, JsonLines };
enum class ReportKind { Groups, ByMaxPrime, GenericPrimes, NongenericTable, KnTable, Extremes };

struct PiSource {
    enum class Kind { List, MaxPrime, File } kind = Kind::List;
    std::vector<Prime> list;
    std::uint64_t max_prime = 0;
    std::filesystem::path file;
};

struct RunConfig {
    PiSource pi_source;
    OutputFormat format = OutputFormat::Text;
    ReportKind report = ReportKind::Groups;
    unsigned threads = 1;
    std::uint32_t k_margin = 1;
    std::uint32_t rank_margin = 1;
    bool rank_early_exit = true;
    std::optional<std::filesystem::path> cache_path;
    // Open interval (lo, hi) of max primes for the table reports.
    Prime range_lo = 0;
    Prime range_hi = UINT64_MAX;

    EnumerateOptions enumerate_options() const {
        return {k_margin, rank_margin, threads, rank_early_exit};
    }
};

// Parses `enumerate ...` (args excludes the program name). Throws
// UsageError on unknown flags, malformed or non-prime lists and
// conflicting prime sources. `env_cache` is the value of
// SIMPLE_SPECTRUM_CACHE, if set.
RunConfig parse_config(const std::vector<std::string>& args,
                       std::optional<std::string> env_cache = std::nullopt);

// Parses "2,3,5" (whitespace and newlines also separate). Throws
// UsageError naming the offending entry and its index.
std::vector<Prime> parse_prime_list(std::string_view text);

// Materialises the prime set; reads the file for --pi-file.
PrimeSet resolve_prime_set(const PiSource& source);

std::string_view format_name(OutputFormat f);
std::string_view report_name(ReportKind r);

}  // namespace sspec
