#include "sspec/report.hpp"

#include <json.hpp>

#include "sspec/analytics.hpp"

namespace sspec {

namespace {

using nlohmann::json;

std::string join(const std::vector<GroupRecord>& records, std::string_view sep) {
    std::string out;
    for (const GroupRecord& rec : records) {
        if (!out.empty()) out += sep;
        out += rec.canonical_name;
    }
    return out;
}

json names_json(const std::vector<GroupRecord>& records) {
    json arr = json::array();
    for (const GroupRecord& rec : records) arr.push_back(rec.canonical_name);
    return arr;
}

std::string groups_summary(std::size_t n) { return std::to_string(n) + " groups"; }

void summary_line(const RunConfig& config, std::ostream& out, const std::string& prefix, std::size_t groups) {
    const std::string text = prefix.empty() ? groups_summary(groups) : prefix + ", " + groups_summary(groups);
    switch (config.format) {
        case OutputFormat::Text:
            out << text << '\n';
            break;
        case OutputFormat::Tsv:
            out << "# " << text << '\n';
            break;
        case OutputFormat::JsonLines:
            out << json{{"summary", text}, {"groups", groups}}.dump() << '\n';
            break;
    }
}

std::uint32_t subscript_of(const GroupRecord& rec) {
    return rec.id.family == Family::Sporadic ? 0 : rec.id.n;
}

void emit_groups(std::span<const GroupRecord> records, const RunConfig& config, std::ostream& out) {
    if (config.format == OutputFormat::Tsv) out << "#name\tfamily\tp\tk\tsubscript\torder_bits\tspectrum\n";
    for (const GroupRecord& rec : records) {
        switch (config.format) {
            case OutputFormat::Text:
                out << rec.canonical_name << ' ' << spectrum_string(rec.spectrum) << '\n';
                break;
            case OutputFormat::Tsv: {
                const mpz_class order = rec.order_factors.product();
                out << rec.canonical_name << '\t' << family_name(rec.id.family) << '\t' << rec.id.p << '\t'
                    << rec.id.k << '\t' << subscript_of(rec) << '\t' << mpz_sizeinbase(order.get_mpz_t(), 2)
                    << '\t' << spectrum_string(rec.spectrum) << '\n';
                break;
            }
            case OutputFormat::JsonLines: {
                const mpz_class order = rec.order_factors.product();
                json aliases = json::array();
                for (const GroupId& a : rec.aliases) aliases.push_back(atlas_name(a));
                json obj{{"name", rec.canonical_name},
                         {"family", family_name(rec.id.family)},
                         {"p", rec.id.is_lie() ? json(rec.id.p) : json(nullptr)},
                         {"k", rec.id.is_lie() ? json(rec.id.k) : json(nullptr)},
                         {"subscript", subscript_of(rec)},
                         {"order_bits", mpz_sizeinbase(order.get_mpz_t(), 2)},
                         {"spectrum", rec.spectrum},
                         {"aliases", aliases},
                         {"max_prime", rec.max_prime},
                         {"spectrum_size", rec.spectrum_size}};
                out << obj.dump() << '\n';
                break;
            }
        }
    }
    summary_line(config, out, "", records.size());
}

// Rows of the per-prime tables: one line per class in the range.
void emit_classes(std::span<const GroupRecord> records, const RunConfig& config, std::ostream& out,
                  bool nongeneric_only) {
    const Partition partition = partition_by_max_prime(records);
    std::size_t rows = 0;
    std::size_t listed = 0;
    if (config.format == OutputFormat::Tsv) out << "#p\tclass_size\tlisted\tgroups\n";
    for (auto it = partition.upper_bound(config.range_lo); it != partition.end() && it->first < config.range_hi;
         ++it) {
        const SpectrumClass& cls = it->second;
        if (nongeneric_only && cls.is_generic) continue;
        const auto& shown = nongeneric_only ? cls.nongeneric_members : cls.members;
        ++rows;
        listed += shown.size();
        switch (config.format) {
            case OutputFormat::Text:
                out << cls.p << " | " << cls.members.size() << " | " << join(shown, ", ") << '\n';
                break;
            case OutputFormat::Tsv:
                out << cls.p << '\t' << cls.members.size() << '\t' << shown.size() << '\t' << join(shown, ",")
                    << '\n';
                break;
            case OutputFormat::JsonLines:
                out << json{{"p", cls.p},
                            {"class_size", cls.members.size()},
                            {"generic", cls.is_generic},
                            {"nongeneric", names_json(cls.nongeneric_members)},
                            {"members", names_json(cls.members)}}
                           .dump()
                    << '\n';
                break;
        }
    }
    const std::string what = nongeneric_only ? std::to_string(rows) + " non-generic primes, " +
                                                   std::to_string(listed) + " non-generic groups"
                                             : std::to_string(rows) + " primes";
    summary_line(config, out, what, records.size());
}

void emit_generic_primes(std::span<const GroupRecord> records, const RunConfig& config, std::ostream& out) {
    const Partition partition = partition_by_max_prime(records);
    const auto primes = classify_generic_primes(partition, config.range_lo, config.range_hi);
    for (Prime p : primes) {
        if (config.format == OutputFormat::JsonLines) {
            out << json{{"p", p}}.dump() << '\n';
        } else {
            out << p << '\n';
        }
    }
    summary_line(config, out, std::to_string(primes.size()) + " generic primes", records.size());
}

void emit_kn(std::span<const GroupRecord> records, const RunConfig& config, std::ostream& out) {
    if (config.format == OutputFormat::Tsv) out << "#n\tcount\tgroups\n";
    for (const KnStratum& s : stratify_kn(records)) {
        switch (config.format) {
            case OutputFormat::Text:
                out << "K" << s.n << " | " << s.count << " | " << join(s.members, ", ") << '\n';
                break;
            case OutputFormat::Tsv:
                out << s.n << '\t' << s.count << '\t' << join(s.members, ",") << '\n';
                break;
            case OutputFormat::JsonLines:
                out << json{{"n", s.n}, {"count", s.count}, {"members", names_json(s.members)}}.dump() << '\n';
                break;
        }
    }
    summary_line(config, out, "", records.size());
}

void emit_extremes(std::span<const GroupRecord> records, const RunConfig& config, std::ostream& out) {
    // The two largest non-alternating spectrum sizes.
    Extremes top = extremes(records);
    std::vector<Extremes> tiers{top};
    if (top.max_size > 1) {
        Extremes next = extremes(records, top.max_size - 1);
        if (!next.witnesses.empty()) tiers.push_back(next);
    }
    for (const Extremes& tier : tiers) {
        for (const GroupRecord& rec : tier.witnesses) {
            switch (config.format) {
                case OutputFormat::Text:
                    out << tier.max_size << " | " << rec.canonical_name << " | " << spectrum_string(rec.spectrum)
                        << '\n';
                    break;
                case OutputFormat::Tsv:
                    out << tier.max_size << '\t' << rec.canonical_name << '\t' << spectrum_string(rec.spectrum)
                        << '\n';
                    break;
                case OutputFormat::JsonLines:
                    out << json{{"spectrum_size", tier.max_size},
                                {"name", rec.canonical_name},
                                {"spectrum", rec.spectrum}}
                               .dump()
                        << '\n';
                    break;
            }
        }
        for (const auto& shared : tier.shared_spectra) {
            std::string names;
            for (const auto& n : shared) names += (names.empty() ? "" : ", ") + n;
            if (config.format == OutputFormat::JsonLines) {
                out << json{{"spectrum_size", tier.max_size}, {"shared_spectrum", shared}}.dump() << '\n';
            } else {
                out << (config.format == OutputFormat::Tsv ? "# " : "") << "shared spectrum: " << names << '\n';
            }
        }
    }
    summary_line(config, out, "largest non-alternating spectrum size " + std::to_string(top.max_size),
                 records.size());
}

}  // namespace

std::string spectrum_string(std::span<const Prime> spectrum) {
    std::string out;
    for (Prime p : spectrum) {
        if (!out.empty()) out += ',';
        out += std::to_string(p);
    }
    return out;
}

void emit_report(std::span<const GroupRecord> records, const RunConfig& config, std::ostream& out) {
    switch (config.report) {
        case ReportKind::Groups:
            emit_groups(records, config, out);
            break;
        case ReportKind::ByMaxPrime:
            emit_classes(records, config, out, false);
            break;
        case ReportKind::NongenericTable:
            emit_classes(records, config, out, true);
            break;
        case ReportKind::GenericPrimes:
            emit_generic_primes(records, config, out);
            break;
        case ReportKind::KnTable:
            emit_kn(records, config, out);
            break;
        case ReportKind::Extremes:
            emit_extremes(records, config, out);
            break;
    }
}

}  // namespace sspec
