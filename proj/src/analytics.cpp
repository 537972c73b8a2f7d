#include "sspec/analytics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sspec {

Partition partition_by_max_prime(std::span<const GroupRecord> records) {
    Partition out;
    for (const GroupRecord& rec : records) {
        SpectrumClass& cls = out[rec.max_prime];
        cls.p = rec.max_prime;
        cls.members.push_back(rec);
    }
    for (auto& [p, cls] : out) {
        std::set<std::string> generic_names;
        if (p >= 5) {
            for (const GroupId& id : generic_groups(p)) generic_names.insert(canonical_name(id));
        }
        for (const GroupRecord& rec : cls.members) {
            if (generic_names.contains(rec.canonical_name)) {
                cls.generic_members.push_back(rec);
            } else {
                cls.nongeneric_members.push_back(rec);
            }
        }
        cls.is_generic = cls.nongeneric_members.empty();
    }
    return out;
}

std::vector<GroupId> generic_groups(Prime p) {
    if (p < 5 || !is_prime(p)) throw std::domain_error("generic groups are defined for primes p >= 5");
    std::vector<GroupId> out{canonical_representative(GroupId::lie(Family::L, 2, p, 1))};
    const Prime next = next_prime(p);
    for (Prime n = p; n < next; ++n) {
        const GroupId a = GroupId::alternating(static_cast<std::uint32_t>(n));
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
    return out;
}

namespace {

template <class Pred>
std::vector<Prime> primes_where(const Partition& partition, Prime lo, Prime hi, Pred pred) {
    std::vector<Prime> out;
    for (auto it = partition.upper_bound(lo); it != partition.end() && it->first < hi; ++it) {
        if (pred(it->second)) out.push_back(it->first);
    }
    return out;
}

}  // namespace

std::vector<Prime> classify_generic_primes(const Partition& partition, Prime lo, Prime hi) {
    return primes_where(partition, lo, hi, [](const SpectrumClass& c) { return c.is_generic; });
}

std::vector<Prime> classify_nongeneric_primes(const Partition& partition, Prime lo, Prime hi) {
    return primes_where(partition, lo, hi, [](const SpectrumClass& c) { return !c.is_generic; });
}

std::size_t count_nongeneric(const Partition& partition, Prime lo, Prime hi) {
    std::size_t total = 0;
    for (Prime p : classify_nongeneric_primes(partition, lo, hi)) total += partition.at(p).nongeneric_members.size();
    return total;
}

std::vector<KnStratum> stratify_kn(std::span<const GroupRecord> records) {
    std::map<std::size_t, KnStratum> by_size;
    for (const GroupRecord& rec : records) {
        KnStratum& s = by_size[rec.spectrum_size];
        s.n = rec.spectrum_size;
        s.members.push_back(rec);
        ++s.count;
    }
    std::vector<KnStratum> out;
    for (auto& entry : by_size) out.push_back(std::move(entry.second));
    return out;
}

Extremes extremes(std::span<const GroupRecord> records, std::size_t size) {
    Extremes out;
    if (size == 0) {
        for (const GroupRecord& rec : records) {
            if (rec.id.family != Family::Alternating) out.max_size = std::max(out.max_size, rec.spectrum_size);
        }
    } else {
        out.max_size = size;
    }
    for (const GroupRecord& rec : records) {
        if (rec.id.family != Family::Alternating && rec.spectrum_size == out.max_size) out.witnesses.push_back(rec);
    }
    std::map<std::vector<Prime>, std::vector<std::string>> by_spectrum;
    for (const GroupRecord& rec : out.witnesses) by_spectrum[rec.spectrum].push_back(rec.canonical_name);
    for (auto& entry : by_spectrum) {
        if (entry.second.size() >= 2) out.shared_spectra.push_back(std::move(entry.second));
    }
    return out;
}

}  // namespace sspec
