#include "sspec/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "sspec/term_sieve.hpp"

namespace sspec {

namespace {

constexpr std::uint64_t kMinRankBound = 8;
constexpr int kEarlyExitStreak = 3;

bool family_allows(const FamilySpec& spec, Prime p, std::uint32_t k) {
    if (spec.required_characteristic != 0 && p != spec.required_characteristic) return false;
    if (spec.odd_k_only && k % 2 == 0) return false;
    if (spec.odd_q_only && p == 2) return false;
    return true;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        body(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        next = count;
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

CandidateBounds compute_bounds(const PrimeSet& pi, std::uint32_t k_margin, std::uint32_t rank_margin) {
    if (pi.empty()) throw std::domain_error("prime set is empty");
    if (k_margin == 0 || rank_margin == 0) throw std::domain_error("margins must be positive");
    CandidateBounds b;
    b.p0 = next_prime(pi.max_prime());
    b.alt_max = b.p0 - 1;
    for (Prime p : pi.primes()) {
        CharacteristicBound c;
        c.p = p;
        c.t_p = t_bound(p, pi);
        c.rank_max = std::max(kMinRankBound, c.t_p) * rank_margin;
        c.k_max = c.t_p * k_margin;
        b.characteristics.push_back(c);
    }
    return b;
}

std::vector<std::uint32_t> subscripts_within(Family f, std::uint64_t rank_max) {
    const FamilySpec& spec = family_spec(f);
    std::vector<std::uint32_t> out;
    if (spec.fixed_rank != 0) {
        if (spec.untwisted_rank <= rank_max) out.push_back(spec.fixed_rank);
        return out;
    }
    for (std::uint64_t l = spec.min_simple_rank; l <= rank_max; ++l) {
        out.push_back(spec.subscript_of_rank(static_cast<std::uint32_t>(l)));
    }
    return out;
}

void for_each_candidate(const CandidateBounds& bounds, const std::function<void(const GroupId&)>& visit) {
    for (std::uint32_t i = 0; i < kFixedOrderCount; ++i) visit(GroupId::sporadic(static_cast<SporadicGroup>(i)));
    for (std::uint64_t n = 5; n <= bounds.alt_max; ++n) visit(GroupId::alternating(static_cast<std::uint32_t>(n)));
    for (const CharacteristicBound& c : bounds.characteristics) {
        for (std::uint64_t k = 1; k <= c.k_max; ++k) {
            for (Family f : kLieFamilies) {
                const FamilySpec& spec = family_spec(f);
                if (!family_allows(spec, c.p, static_cast<std::uint32_t>(k))) continue;
                for (std::uint32_t n : subscripts_within(f, c.rank_max)) {
                    const GroupId id = GroupId::lie(f, n, c.p, static_cast<std::uint32_t>(k));
                    if (is_admissible(id)) visit(id);
                }
            }
        }
    }
}

std::vector<GroupId> candidate_stream(const CandidateBounds& bounds) {
    std::vector<GroupId> out;
    for_each_candidate(bounds, [&](const GroupId& id) { out.push_back(id); });
    return out;
}

std::vector<GroupId> run_work_unit(const WorkUnit& unit, const CharacteristicBound& bound,
                                   CharacteristicSieve& sieve, bool rank_early_exit) {
    const FamilySpec& spec = family_spec(unit.family);
    std::vector<GroupId> accepted;
    if (!family_allows(spec, unit.p, unit.k)) return accepted;

    PowerTerm last_failure{0, false};
    int streak = 0;
    for (std::uint32_t n : subscripts_within(unit.family, bound.rank_max)) {
        const GroupId id = GroupId::lie(unit.family, n, unit.p, unit.k);
        if (!is_admissible(id)) continue;
        const std::uint32_t rank = spec.rank_of_subscript(n);

        // Non-pi part of |G| = product of the terms' non-pi parts divided by
        // those of the divide-terms; the center only removes pi-primes.
        double rough = 0.0;
        PowerTerm leading{0, false};
        bool have_leading = false;
        for (PowerTerm t : spec.terms(rank)) {
            const double r = sieve.rough_log(unit.k, t);
            if (r >= CharacteristicSieve::kSmoothThreshold && !have_leading) {
                leading = t;
                have_leading = true;
                if (spec.divide_terms.empty()) break;
            }
            rough += r;
        }
        if (!spec.divide_terms.empty()) {
            for (PowerTerm t : spec.divide_terms) rough -= sieve.rough_log(unit.k, t);
        }
        if (rough < CharacteristicSieve::kSmoothThreshold && !(have_leading && spec.divide_terms.empty())) {
            accepted.push_back(id);
            streak = 0;
            continue;
        }
        if (!rank_early_exit || !have_leading) continue;
        streak = (streak > 0 && leading == last_failure) ? streak + 1 : 1;
        last_failure = leading;
        if (streak >= kEarlyExitStreak) break;
    }
    return accepted;
}

bool record_less(const GroupRecord& a, const GroupRecord& b) {
    if (a.max_prime != b.max_prime) return a.max_prime < b.max_prime;
    if (a.spectrum_size != b.spectrum_size) return a.spectrum_size < b.spectrum_size;
    return a.canonical_name < b.canonical_name;
}

std::vector<GroupRecord> enumerate_simple_groups(const PrimeSet& pi, const EnumerateOptions& options) {
    if (pi.empty()) return {};
    const CandidateBounds bounds = compute_bounds(pi, options.k_margin, options.rank_margin);

    std::vector<GroupId> accepted;
    for (std::uint32_t i = 0; i < kFixedOrderCount; ++i) {
        const GroupId id = GroupId::sporadic(static_cast<SporadicGroup>(i));
        if (spectrum(id, pi)) accepted.push_back(id);
    }
    // pi(A_n) only grows with n, so the first rejection ends the chain.
    for (std::uint64_t n = 5; n <= bounds.alt_max; ++n) {
        const GroupId id = GroupId::alternating(static_cast<std::uint32_t>(n));
        if (!spectrum(id, pi)) break;
        accepted.push_back(id);
    }

    const auto& chars = bounds.characteristics;
    std::vector<std::vector<GroupId>> per_char(chars.size());
    parallel_for(chars.size(), options.threads, [&](std::size_t i) {
        const CharacteristicBound& c = chars[i];
        if (c.t_p == 0) return;
        CharacteristicSieve sieve(c.p, pi);
        for (std::uint64_t k = 1; k <= c.k_max; ++k) {
            // Every Lie-type order has the factor q - 1.
            if (!sieve.smooth_minus(k)) continue;
            for (Family f : kLieFamilies) {
                auto found = run_work_unit({f, c.p, static_cast<std::uint32_t>(k)}, c, sieve,
                                           options.rank_early_exit);
                per_char[i].insert(per_char[i].end(), found.begin(), found.end());
            }
        }
    });
    for (auto& ids : per_char) accepted.insert(accepted.end(), ids.begin(), ids.end());

    std::vector<GroupRecord> records(accepted.size());
    parallel_for(accepted.size(), options.threads, [&](std::size_t i) {
        auto rec = spectrum(accepted[i], pi);
        if (!rec) {
            throw InternalError("exact factorisation rejected " + atlas_name(accepted[i]) +
                                " which the term sieve accepted");
        }
        records[i] = std::move(*rec);
    });

    std::sort(records.begin(), records.end(), record_less);
    records.erase(std::unique(records.begin(), records.end(),
                              [](const GroupRecord& a, const GroupRecord& b) {
                                  return a.canonical_name == b.canonical_name;
                              }),
                  records.end());
    return records;
}

}  // namespace sspec
