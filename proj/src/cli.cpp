#include "sspec/cli.hpp"

#include "sspec/cache.hpp"
#include "sspec/config.hpp"
#include "sspec/enumerator.hpp"
#include "sspec/report.hpp"

namespace sspec {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::optional<std::string> env_cache) {
    RunConfig config;
    PrimeSet pi;
    try {
        config = parse_config(args, std::move(env_cache));
        pi = resolve_prime_set(config.pi_source);
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return static_cast<int>(ExitCode::Usage);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::Usage);
    }

    std::vector<GroupRecord> records;
    try {
        const EnumerateOptions options = config.enumerate_options();
        const Digest digest = cache_digest(pi, options);
        std::optional<CacheEntry> cached;
        if (config.cache_path) cached = read_cache(*config.cache_path, digest, err);
        if (cached) {
            records = std::move(cached->records);
        } else {
            records = enumerate_simple_groups(pi, options);
            if (config.cache_path) {
                try {
                    write_cache(*config.cache_path, {digest, std::string(kToolVersion), records});
                } catch (const std::exception& e) {
                    err << "warning: " << e.what() << '\n';
                }
            }
        }
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::Runtime);
    }

    emit_report(records, config, out);
    out.flush();
    if (!out) {
        err << "error: output truncated (partial output)\n";
        return static_cast<int>(ExitCode::Io);
    }
    return static_cast<int>(ExitCode::Ok);
}

}  // namespace sspec
