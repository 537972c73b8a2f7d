#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "sspec/analytics.hpp"
#include "sspec/enumerator.hpp"

using namespace sspec;

namespace {

const std::vector<GroupRecord>& small_run() {
    static const std::vector<GroupRecord> recs = enumerate_simple_groups(sieve_primes(300));
    return recs;
}

std::set<std::string> names(const std::vector<GroupRecord>& recs) {
    std::set<std::string> out;
    for (const auto& r : recs) out.insert(r.canonical_name);
    return out;
}

std::set<std::string> names(const std::vector<GroupId>& ids) {
    std::set<std::string> out;
    for (const auto& id : ids) out.insert(canonical_name(id));
    return out;
}

}  // namespace

TEST_CASE("generic_groups examples") {
    CHECK(names(generic_groups(5)) == std::set<std::string>{"A5", "A6"});
    CHECK(names(generic_groups(7)) == std::set<std::string>{"L2(7)", "A7", "A8", "A9", "A10"});
    // 1009, next prime 1013
    CHECK(names(generic_groups(1009)) ==
          std::set<std::string>{"L2(1009)", "A1009", "A1010", "A1011", "A1012"});
    CHECK(generic_groups(1009).size() == 5);
    // 9973, next prime 10007
    CHECK(generic_groups(9973).size() == 35);
    CHECK_THROWS_AS(generic_groups(3), std::domain_error);
    CHECK_THROWS_AS(generic_groups(2), std::domain_error);
    CHECK_THROWS_AS(generic_groups(9), std::domain_error);
}

TEST_CASE("partition covers every record once") {
    const auto& recs = small_run();
    const Partition part = partition_by_max_prime(recs);
    std::size_t total = 0;
    for (const auto& [p, cls] : part) {
        CHECK(cls.p == p);
        CHECK(cls.members.size() == cls.generic_members.size() + cls.nongeneric_members.size());
        CHECK(cls.is_generic == cls.nongeneric_members.empty());
        for (const auto& m : cls.members) CHECK(m.max_prime == p);
        total += cls.members.size();
    }
    CHECK(total == recs.size());
}

TEST_CASE("every class contains its generic groups") {
    const Partition part = partition_by_max_prime(small_run());
    const PrimeSet pi = sieve_primes(300);
    for (Prime p : pi.primes()) {
        if (p < 5) continue;
        REQUIRE(part.count(p));
        const auto have = names(part.at(p).members);
        const auto gen = names(generic_groups(p));
        CHECK(names(part.at(p).generic_members) == gen);
        for (const auto& g : gen) CHECK(have.count(g));
    }
    CHECK_FALSE(part.count(2));
    CHECK_FALSE(part.count(3));
}

TEST_CASE("known classes below 300") {
    const Partition part = partition_by_max_prime(small_run());
    // small classes are non-generic
    CHECK(names(part.at(5).members) == std::set<std::string>{"A5", "A6", "S4(3)"});
    CHECK(names(part.at(7).nongeneric_members) ==
          std::set<std::string>{"L2(8)", "U3(3)", "J2", "L2(49)", "L3(4)", "O+8(2)", "S4(7)", "S6(2)", "U3(5)",
                                "U4(3)"});
    CHECK(part.at(7).members.size() == 15);
    // 257 = 2^8 + 1
    CHECK(part.at(257).nongeneric_members.size() == 44);
    CHECK(part.at(257).members.size() == 51);

    const auto gen = classify_generic_primes(part, 100, 300);
    const auto non = classify_nongeneric_primes(part, 100, 300);
    std::set<Prime> all(gen.begin(), gen.end());
    all.insert(non.begin(), non.end());
    CHECK(all.size() == gen.size() + non.size());
    std::size_t primes_between = 0;
    const PrimeSet pi = sieve_primes(300);
    for (Prime p : pi.primes()) primes_between += (p > 100 && p < 300);
    CHECK(all.size() == primes_between);
    CHECK(std::find(non.begin(), non.end(), Prime{257}) != non.end());
    std::size_t counted = 0;
    for (Prime p : non) counted += part.at(p).nongeneric_members.size();
    CHECK(count_nongeneric(part, 100, 300) == counted);
    // open interval
    CHECK(classify_nongeneric_primes(part, 257, 258).empty());
    CHECK(classify_nongeneric_primes(part, 256, 258) == std::vector<Prime>{257});
}

TEST_CASE("spectrum-size strata") {
    const auto& recs = small_run();
    const auto strata = stratify_kn(recs);
    std::size_t total = 0, prev_n = 0;
    for (const auto& s : strata) {
        CHECK(s.n > prev_n);
        prev_n = s.n;
        CHECK(s.count == s.members.size());
        for (const auto& m : s.members) CHECK(m.spectrum_size == s.n);
        total += s.count;
    }
    CHECK(total == recs.size());
    CHECK(strata.front().n == 3);

    // K_n can only grow as the prime set grows
    const auto bigger = stratify_kn(enumerate_simple_groups(sieve_primes(600)));
    for (const auto& s : strata) {
        auto it = std::find_if(bigger.begin(), bigger.end(), [&](const KnStratum& b) { return b.n == s.n; });
        REQUIRE(it != bigger.end());
        CHECK(it->count >= s.count);
    }
}

TEST_CASE("extremes") {
    const auto tiny = enumerate_simple_groups(PrimeSet({2, 3, 5}));
    const Extremes e = extremes(tiny);
    CHECK(e.max_size == 3);
    REQUIRE(e.witnesses.size() == 1);
    CHECK(e.witnesses.front().canonical_name == "S4(3)");

    const auto u5 = enumerate_simple_groups(PrimeSet({2, 3, 5, 11, 37, 61, 13421}));
    const Extremes top = extremes(u5);
    CHECK(top.max_size == 7);
    CHECK(names(top.witnesses) == std::set<std::string>{"U5(11)"});
    CHECK(top.shared_spectra.empty());
    const Extremes four = extremes(u5, 4);
    CHECK(names(four.witnesses) == std::set<std::string>{"L2(11)", "M11", "M12", "U5(2)", "L2(3^5)"});
}
