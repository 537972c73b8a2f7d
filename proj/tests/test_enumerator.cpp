#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "sspec/enumerator.hpp"

using namespace sspec;

namespace {

std::vector<std::string> names_of(const std::vector<GroupRecord>& recs) {
    std::vector<std::string> out;
    for (const auto& r : recs) out.push_back(r.canonical_name);
    return out;
}

std::set<std::string> name_set(const std::vector<GroupRecord>& recs) {
    auto v = names_of(recs);
    return {v.begin(), v.end()};
}

std::uint64_t brute_order(std::uint64_t p, std::uint64_t r) {
    std::uint64_t x = p % r, o = 1;
    while (x != 1) {
        x = x * (p % r) % r;
        ++o;
    }
    return o;
}

PrimeSet random_subset(const PrimeSet& universe, std::mt19937_64& rng, double keep) {
    std::bernoulli_distribution coin(keep);
    std::vector<Prime> chosen;
    for (Prime r : universe.primes())
        if (r <= 5 || coin(rng)) chosen.push_back(r);
    return PrimeSet(std::move(chosen));
}

const PrimeSet kU5Set({2, 3, 5, 11, 37, 61, 13421});

}  // namespace

TEST_CASE("compute_bounds examples") {
    const CandidateBounds b = compute_bounds(PrimeSet({2, 3, 5}));
    CHECK(b.p0 == 7);
    CHECK(b.alt_max == 6);
    REQUIRE(b.characteristics.size() == 3);
    // ord_3(2) = 2, ord_5(2) = 4; ord_5(3) = 4; ord_3(5) = 2
    CHECK(b.characteristics[0].t_p == std::max(brute_order(2, 3), brute_order(2, 5)));
    CHECK(b.characteristics[0].t_p == 4);
    CHECK(b.characteristics[1].t_p == 4);
    CHECK(b.characteristics[2].t_p == 2);
    CHECK(b.characteristics[0].rank_max == 8);
    CHECK(b.characteristics[0].k_max == 4);

    const CandidateBounds wide = compute_bounds(PrimeSet({2, 3, 5}), 2, 3);
    CHECK(wide.characteristics[0].k_max == 8);
    CHECK(wide.characteristics[0].rank_max == 24);

    const CandidateBounds big = compute_bounds(sieve_primes(10000));
    CHECK(big.p0 == 10007);
    CHECK(big.alt_max == 10006);
    CHECK(big.characteristics.size() == 1229);

    CHECK(compute_bounds(PrimeSet({2})).characteristics.front().t_p == 0);
    CHECK_THROWS(compute_bounds(PrimeSet(std::vector<Prime>{})));
    CHECK_THROWS(compute_bounds(PrimeSet({2, 3}), 0, 1));
}

TEST_CASE("candidate stream contents") {
    const auto two = candidate_stream(compute_bounds(PrimeSet({2})));
    CHECK(two.size() == kFixedOrderCount);
    for (const auto& id : two) CHECK(id.family == Family::Sporadic);

    const CandidateBounds b = compute_bounds(PrimeSet({2, 3, 5}));
    const auto stream = candidate_stream(b);
    auto has = [&](const GroupId& id) { return std::find(stream.begin(), stream.end(), id) != stream.end(); };
    CHECK(has(GroupId::alternating(5)));
    CHECK(has(GroupId::alternating(6)));
    CHECK_FALSE(has(GroupId::alternating(7)));
    CHECK(has(GroupId::lie(Family::S, 4, 3, 1)));
    CHECK_FALSE(has(GroupId::lie(Family::U, 4, 2, 1)));
    CHECK_FALSE(has(GroupId::lie(Family::L, 2, 2, 2)));
    for (const auto& id : stream) {
        CHECK(is_admissible(id));
        if (!id.is_lie()) continue;
        const auto& cb = *std::find_if(b.characteristics.begin(), b.characteristics.end(),
                                       [&](const CharacteristicBound& c) { return c.p == id.p; });
        CHECK(id.k <= cb.k_max);
        CHECK(lie_rank(id) <= cb.rank_max);
    }
    std::set<GroupId> unique(stream.begin(), stream.end());
    CHECK(unique.size() == stream.size());
}

TEST_CASE("the U5(11) prime set") {
    const auto recs = enumerate_simple_groups(kU5Set);
    const std::vector<std::string> want = {"A5",     "A6",     "U5(2)",  "L2(3^5)", "S4(3)", "L2(11)", "L2(11^2)",
                                           "S4(11)", "U3(11)", "U4(11)", "U5(11)",  "M11",   "M12"};
    CHECK(name_set(recs) == std::set<std::string>(want.begin(), want.end()));
    CHECK(recs.size() == 13);
    CHECK(std::is_sorted(recs.begin(), recs.end(), record_less));
}

TEST_CASE("empty and tiny sets") {
    CHECK(enumerate_simple_groups(PrimeSet({2, 3})).empty());
    CHECK(enumerate_simple_groups(PrimeSet({2})).empty());
    CHECK(names_of(enumerate_simple_groups(PrimeSet({2, 3, 5}))) ==
          std::vector<std::string>{"A5", "A6", "S4(3)"});
    const auto seven = name_set(enumerate_simple_groups(PrimeSet({2, 3, 7})));
    CHECK(seven == std::set<std::string>{"L2(7)", "L2(8)", "U3(3)"});
}

TEST_CASE("fast path equals exact filtering of the candidate stream") {
    for (Prime limit : {7ull, 13ull, 19ull, 23ull}) {
        const PrimeSet pi = sieve_primes(limit);
        std::vector<GroupRecord> slow;
        for (const GroupId& id : candidate_stream(compute_bounds(pi)))
            if (auto rec = spectrum(id, pi)) slow.push_back(*rec);
        std::sort(slow.begin(), slow.end(), record_less);
        const auto fast = enumerate_simple_groups(pi, EnumerateOptions{.rank_early_exit = false});
        INFO("limit " << limit);
        CHECK(names_of(fast) == names_of(slow));
        CHECK(fast == slow);
    }
    // random sets exercise sieve paths where the characteristic is not
    // surrounded by all smaller primes
    std::mt19937_64 rng(77);
    const PrimeSet universe = sieve_primes(60);
    for (int trial = 0; trial < 12; ++trial) {
        const PrimeSet pi = random_subset(universe, rng, 0.5);
        std::vector<GroupRecord> slow;
        for (const GroupId& id : candidate_stream(compute_bounds(pi)))
            if (auto rec = spectrum(id, pi)) slow.push_back(*rec);
        std::sort(slow.begin(), slow.end(), record_less);
        CHECK(enumerate_simple_groups(pi) == slow);
    }
}

TEST_CASE("wider bounds and disabling the early exit change nothing") {
    const PrimeSet pi = sieve_primes(200);
    const auto base = enumerate_simple_groups(pi);
    CHECK(enumerate_simple_groups(pi, EnumerateOptions{.k_margin = 2}) == base);
    CHECK(enumerate_simple_groups(pi, EnumerateOptions{.rank_margin = 2}) == base);
    CHECK(enumerate_simple_groups(pi, EnumerateOptions{.rank_early_exit = false}) == base);
}

TEST_CASE("result is independent of the thread count") {
    const PrimeSet pi = sieve_primes(300);
    const auto one = enumerate_simple_groups(pi, EnumerateOptions{.threads = 1});
    CHECK(enumerate_simple_groups(pi, EnumerateOptions{.threads = 4}) == one);
    CHECK(enumerate_simple_groups(pi, EnumerateOptions{.threads = 16}) == one);
}

TEST_CASE("monotone under inclusion") {
    std::mt19937_64 rng(4242);
    const PrimeSet universe = sieve_primes(200);
    for (int trial = 0; trial < 50; ++trial) {
        const PrimeSet big = random_subset(universe, rng, 0.7);
        std::vector<Prime> sub;
        std::bernoulli_distribution coin(0.7);
        for (Prime r : big.primes())
            if (r <= 3 || coin(rng)) sub.push_back(r);
        const PrimeSet small(std::move(sub));

        const auto big_recs = enumerate_simple_groups(big);
        const auto small_recs = enumerate_simple_groups(small);
        std::vector<GroupRecord> restricted;
        for (const auto& r : big_recs)
            if (std::all_of(r.spectrum.begin(), r.spectrum.end(), [&](Prime x) { return small.contains(x); }))
                restricted.push_back(r);
        REQUIRE(names_of(small_recs) == names_of(restricted));
    }
}

TEST_CASE("every reported order factors over pi") {
    const PrimeSet pi = sieve_primes(400);
    const auto recs = enumerate_simple_groups(pi);
    int small_orders = 0;
    for (const auto& r : recs) {
        const mpz_class order = group_order(r.id);
        REQUIRE(r.order_factors.product() == order);
        if (!order.fits_ulong_p() || order > mpz_class("1000000000000000000")) continue;
        // plain trial division, independent of constrained_factor
        std::uint64_t n = order.get_ui();
        std::vector<Prime> seen;
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d) continue;
            seen.push_back(d);
            while (n % d == 0) n /= d;
        }
        if (n > 1) seen.push_back(n);
        CHECK(seen == r.spectrum);
        ++small_orders;
    }
    CHECK(small_orders > 300);
}

TEST_CASE("generic groups are always found") {
    const PrimeSet pi = sieve_primes(300);
    const auto names = name_set(enumerate_simple_groups(pi));
    for (Prime p : pi.primes()) {
        if (p < 5) continue;
        CHECK(names.count("A" + std::to_string(p)));
        if (p > 9) CHECK(names.count("L2(" + std::to_string(p) + ")"));
    }
    CHECK(names.count("A" + std::to_string(next_prime(293) - 1)));
    CHECK_FALSE(names.count("A" + std::to_string(next_prime(293))));
}

TEST_CASE("records are unique and sorted") {
    const auto recs = enumerate_simple_groups(sieve_primes(1000));
    CHECK(recs.size() == 1972);
    CHECK(std::is_sorted(recs.begin(), recs.end(), record_less));
    CHECK(name_set(recs).size() == recs.size());
}
