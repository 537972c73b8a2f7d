#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sspec/order_kernel.hpp"
#include "sspec/prime_engine.hpp"

namespace sspec {

struct CharacteristicBound {
    Prime p = 0;
    std::uint64_t t_p = 0;
    std::uint64_t rank_max = 0;  // max{8, t_p} (times the audit rank margin)
    std::uint64_t k_max = 0;     // t_p * k_margin
};

struct CandidateBounds {
    Prime p0 = 0;                 // smallest prime above max(pi)
    std::uint64_t alt_max = 0;    // p0 - 1
    std::vector<CharacteristicBound> characteristics;
};

// One family over one field F_{p^k}; all ranks are scanned inside it.
struct WorkUnit {
    Family family;
    Prime p;
    std::uint32_t k;
};

struct EnumerateOptions {
    std::uint32_t k_margin = 1;
    std::uint32_t rank_margin = 1;
    unsigned threads = 1;
    // Stop scanning ranks once three consecutive ranks fail on the same
    // leading factor. Disable for audit runs.
    bool rank_early_exit = true;
};

CandidateBounds compute_bounds(const PrimeSet& pi, std::uint32_t k_margin = 1, std::uint32_t rank_margin = 1);

// Visits every admissible candidate in a fixed order: the 27 fixed-order
// groups, A_5..A_{alt_max}, then Lie-type groups by (p, k, family, rank).
void for_each_candidate(const CandidateBounds& bounds, const std::function<void(const GroupId&)>& visit);
std::vector<GroupId> candidate_stream(const CandidateBounds& bounds);

// Ranks of the Lie family that fall under the bound, as Atlas subscripts.
std::vector<std::uint32_t> subscripts_within(Family f, std::uint64_t rank_max);

// Admissible groups of one work unit whose order is pi-smooth.
std::vector<GroupId> run_work_unit(const WorkUnit& unit, const CharacteristicBound& bound,
                                   class CharacteristicSieve& sieve, bool rank_early_exit);

// Result ordering: (max_prime, spectrum_size, canonical_name).
bool record_less(const GroupRecord& a, const GroupRecord& b);

std::vector<GroupRecord> enumerate_simple_groups(const PrimeSet& pi, const EnumerateOptions& options = {});

}  // namespace sspec
