#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sspec/order_kernel.hpp"

namespace sspec {

// The groups G with p in pi(G) subset of {2, ..., p}.
struct SpectrumClass {
    Prime p = 0;
    std::vector<GroupRecord> members;
    std::vector<GroupRecord> generic_members;
    std::vector<GroupRecord> nongeneric_members;
    bool is_generic = true;
};

struct KnStratum {
    std::size_t n = 0;
    std::vector<GroupRecord> members;
    std::size_t count = 0;
};

using Partition = std::map<Prime, SpectrumClass>;

Partition partition_by_max_prime(std::span<const GroupRecord> records);

// L_2(p), A_p, ..., A_{p'-1} after canonicalisation (p' the next prime).
// Throws std::domain_error for p < 5 or p composite.
std::vector<GroupId> generic_groups(Prime p);

// Primes strictly between lo and hi whose class has no non-generic member.
std::vector<Prime> classify_generic_primes(const Partition& partition, Prime lo, Prime hi);
std::vector<Prime> classify_nongeneric_primes(const Partition& partition, Prime lo, Prime hi);
// Total non-generic members over the classes strictly between lo and hi.
std::size_t count_nongeneric(const Partition& partition, Prime lo, Prime hi);

std::vector<KnStratum> stratify_kn(std::span<const GroupRecord> records);

struct Extremes {
    std::size_t max_size = 0;  // largest non-alternating spectrum size
    std::vector<GroupRecord> witnesses;
    // Witnesses grouped by identical spectra, groups of size >= 2 only.
    std::vector<std::vector<std::string>> shared_spectra;
};

// Non-alternating records with spectrum size `size` (the top size when 0).
Extremes extremes(std::span<const GroupRecord> records, std::size_t size = 0);

}  // namespace sspec
