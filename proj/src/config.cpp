#include "sspec/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

namespace sspec {

namespace {

const std::map<std::string, OutputFormat> kFormats = {
    {"text", OutputFormat::Text}, {"tsv", OutputFormat::Tsv}, {"jsonl", OutputFormat::JsonLines}};

const std::map<std::string, ReportKind> kReports = {
    {"groups", ReportKind::Groups},
    {"by-max-prime", ReportKind::ByMaxPrime},
    {"generic-primes", ReportKind::GenericPrimes},
    {"nongeneric-table", ReportKind::NongenericTable},
    {"kn-table", ReportKind::KnTable},
    {"extremes", ReportKind::Extremes},
};

std::uint64_t parse_u64(std::string_view token, std::string_view what) {
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size() || token.empty()) {
        throw UsageError("malformed " + std::string(what) + " '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

std::vector<Prime> parse_prime_list(std::string_view text) {
    std::vector<Prime> out;
    std::string cleaned;
    for (std::istringstream lines{std::string(text)}; std::getline(lines, cleaned);) {
        if (auto hash = cleaned.find('#'); hash != std::string::npos) cleaned.erase(hash);
        for (char& c : cleaned) {
            if (c == ',' || c == '\t' || c == '\r') c = ' ';
        }
        std::istringstream tokens(cleaned);
        for (std::string token; tokens >> token;) {
            const std::size_t index = out.size();
            const std::uint64_t value = parse_u64(token, "prime at index " + std::to_string(index));
            if (!is_prime(value)) {
                throw UsageError(std::to_string(value) + " is not prime (index " + std::to_string(index) + ")");
            }
            out.push_back(value);
        }
    }
    return out;
}

RunConfig parse_config(const std::vector<std::string>& args, std::optional<std::string> env_cache) {
    CLI::App app{"Enumerate non-abelian simple groups with prime spectrum inside a prime set", "sspec"};
    app.require_subcommand(1, 1);
    CLI::App* cmd = app.add_subcommand("enumerate", "Run the enumeration and print a report");

    std::string pi_csv;
    std::string pi_file;
    std::uint64_t max_prime = 0;
    std::string report = "groups";
    std::string format = "text";
    std::string range;
    std::string cache;
    RunConfig cfg;

    auto* o_pi = cmd->add_option("--pi", pi_csv, "Comma-separated primes");
    auto* o_file = cmd->add_option("--pi-file", pi_file, "File with primes (comma/whitespace separated)");
    auto* o_max = cmd->add_option("--max-prime", max_prime, "Use all primes <= N");
    o_pi->excludes(o_file)->excludes(o_max);
    o_file->excludes(o_max);
    cmd->add_option("--report", report, "groups|by-max-prime|generic-primes|nongeneric-table|kn-table|extremes");
    cmd->add_option("--format", format, "text|tsv|jsonl");
    cmd->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--k-margin", cfg.k_margin, "Multiplier on the field-exponent bound")->check(CLI::PositiveNumber);
    cmd->add_option("--rank-margin", cfg.rank_margin, "Multiplier on the rank bound (audit)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cache", cache, "Result cache file");
    cmd->add_option("--range", range, "LO,HI: open interval of max primes for table reports");
    bool no_early_exit = false;
    cmd->add_flag("--no-rank-early-exit", no_early_exit, "Scan every rank up to the bound (audit)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw UsageError(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    const int sources = (o_pi->count() > 0) + (o_file->count() > 0) + (o_max->count() > 0);
    if (sources != 1) throw UsageError("exactly one of --pi, --pi-file, --max-prime is required");
    if (o_pi->count()) {
        cfg.pi_source.kind = PiSource::Kind::List;
        cfg.pi_source.list = parse_prime_list(pi_csv);
        if (cfg.pi_source.list.empty()) throw UsageError("--pi needs at least one prime");
    } else if (o_file->count()) {
        cfg.pi_source.kind = PiSource::Kind::File;
        cfg.pi_source.file = pi_file;
    } else {
        if (max_prime < 2) throw UsageError("--max-prime must be at least 2");
        cfg.pi_source.kind = PiSource::Kind::MaxPrime;
        cfg.pi_source.max_prime = max_prime;
    }

    auto fmt = kFormats.find(format);
    if (fmt == kFormats.end()) throw UsageError("unknown format '" + format + "'");
    cfg.format = fmt->second;
    auto rep = kReports.find(report);
    if (rep == kReports.end()) throw UsageError("unknown report '" + report + "'");
    cfg.report = rep->second;
    cfg.rank_early_exit = !no_early_exit;

    if (!range.empty()) {
        const auto comma = range.find(',');
        if (comma == std::string::npos) throw UsageError("--range expects LO,HI");
        cfg.range_lo = parse_u64(std::string_view(range).substr(0, comma), "range bound");
        cfg.range_hi = parse_u64(std::string_view(range).substr(comma + 1), "range bound");
        if (cfg.range_lo >= cfg.range_hi) throw UsageError("--range needs LO < HI");
    }

    if (!cache.empty()) {
        cfg.cache_path = cache;
    } else if (env_cache && !env_cache->empty()) {
        cfg.cache_path = *env_cache;
    }
    return cfg;
}

PrimeSet resolve_prime_set(const PiSource& source) {
    switch (source.kind) {
        case PiSource::Kind::List:
            return PrimeSet(source.list);
        case PiSource::Kind::MaxPrime:
            return sieve_primes(source.max_prime);
        case PiSource::Kind::File: {
            std::ifstream in(source.file);
            if (!in) throw UsageError("cannot read prime file " + source.file.string());
            std::stringstream buffer;
            buffer << in.rdbuf();
            auto primes = parse_prime_list(buffer.str());
            if (primes.empty()) throw UsageError("prime file " + source.file.string() + " is empty");
            return PrimeSet(std::move(primes));
        }
    }
    throw UsageError("no prime source");
}

std::string_view format_name(OutputFormat f) {
    for (const auto& [name, value] : kFormats) {
        if (value == f) return name;
    }
    return "?";
}

std::string_view report_name(ReportKind r) {
    for (const auto& [name, value] : kReports) {
        if (value == r) return name;
    }
    return "?";
}

}  // namespace sspec
