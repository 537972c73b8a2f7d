#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sspec {

using Prime = std::uint64_t;

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

// An immutable, strictly increasing set of primes.
class PrimeSet {
public:
    PrimeSet() = default;

    // Accepts primes in any order; duplicates are dropped. Throws
    // std::invalid_argument naming the zero-based index of the first
    // non-prime entry.
    explicit PrimeSet(std::vector<Prime> primes);

    std::span<const Prime> primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }
    bool empty() const { return primes_.empty(); }
    Prime max_prime() const;
    bool contains(Prime p) const;
    // Position of p in primes(), or size() when absent.
    std::size_t index_of(Prime p) const;

    bool operator==(const PrimeSet&) const = default;

private:
    std::vector<Prime> primes_;
};

// All primes <= limit. Throws std::domain_error when limit < 2.
PrimeSet sieve_primes(std::uint64_t limit);

// Smallest k >= 1 with p^k == 1 (mod r). r must be prime and not divide p.
std::uint64_t multiplicative_order(std::uint64_t p, Prime r);

// max over r in pi \ {p} of ord_r(p); 0 when pi = {p}.
std::uint64_t t_bound(Prime p, const PrimeSet& pi);

struct FactoredOrder {
    std::map<Prime, unsigned long> factors;
    mpz_class leftover = 1;

    bool smooth() const { return leftover == 1; }
    mpz_class product() const;      // prod prime^exp, without the leftover
    std::vector<Prime> primes() const;

    bool operator==(const FactoredOrder& other) const {
        return factors == other.factors && leftover == other.leftover;
    }
};

// Trial division of n by the primes of pi only. leftover == 1 iff n is
// pi-smooth. n must be positive.
FactoredOrder constrained_factor(const mpz_class& n, const PrimeSet& pi);

// p-adic valuation helpers shared by the order kernel.
unsigned long legendre_valuation(std::uint64_t n, Prime p);  // v_p(n!)

}  // namespace sspec
