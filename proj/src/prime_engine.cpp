#include "sspec/prime_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace sspec {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Odd primes below 10^6, used to split r - 1 when computing orders.
const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> table = [] {
        constexpr std::uint32_t limit = 1'000'000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t{i} * i; j <= limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return table;
}

// Distinct prime factors of n if they can all be found by trial division
// up to 10^6 (plus one large prime cofactor); empty optional-like flag
// otherwise.
bool distinct_prime_factors(std::uint64_t n, std::vector<std::uint64_t>& out) {
    out.clear();
    for (std::uint32_t s : small_primes()) {
        if (std::uint64_t{s} * s > n) break;
        if (n % s == 0) {
            out.push_back(s);
            while (n % s == 0) n /= s;
        }
    }
    if (n == 1) return true;
    if (is_prime(n)) {
        out.push_back(n);
        return true;
    }
    return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t s : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % s == 0) return n == s;
    }
    std::uint64_t d = n - 1;
    int shift = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++shift;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < shift; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t n) {
    std::uint64_t c = n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

PrimeSet::PrimeSet(std::vector<Prime> primes) {
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i])) {
            throw std::invalid_argument("entry " + std::to_string(i) + ": " +
                                        std::to_string(primes[i]) + " is not prime");
        }
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    primes_ = std::move(primes);
}

Prime PrimeSet::max_prime() const {
    if (primes_.empty()) throw std::domain_error("empty prime set has no maximum");
    return primes_.back();
}

bool PrimeSet::contains(Prime p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::size_t PrimeSet::index_of(Prime p) const {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) return primes_.size();
    return static_cast<std::size_t>(it - primes_.begin());
}

PrimeSet sieve_primes(std::uint64_t limit) {
    if (limit < 2) throw std::domain_error("empty prime universe: limit must be at least 2");
    std::vector<bool> composite(limit + 1, false);
    std::vector<Prime> out;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return PrimeSet(std::move(out));
}

std::uint64_t multiplicative_order(std::uint64_t p, Prime r) {
    if (r < 2 || !is_prime(r)) throw std::domain_error("modulus " + std::to_string(r) + " is not prime");
    const std::uint64_t base = p % r;
    if (base == 0) {
        throw std::domain_error(std::to_string(r) + " divides " + std::to_string(p) +
                                ": multiplicative order undefined");
    }
    if (base == 1) return 1;

    std::vector<std::uint64_t> factors;
    if (distinct_prime_factors(r - 1, factors)) {
        std::uint64_t order = r - 1;
        for (std::uint64_t s : factors) {
            while (order % s == 0 && pow_mod(base, order / s, r) == 1) order /= s;
        }
        return order;
    }

    std::uint64_t x = base;
    std::uint64_t k = 1;
    while (x != 1) {
        x = mul_mod(x, base, r);
        ++k;
    }
    return k;
}

std::uint64_t t_bound(Prime p, const PrimeSet& pi) {
    if (!pi.contains(p)) throw std::domain_error(std::to_string(p) + " is not in the prime set");
    std::uint64_t best = 0;
    for (Prime r : pi.primes()) {
        if (r == p) continue;
        best = std::max(best, multiplicative_order(p, r));
    }
    return best;
}

mpz_class FactoredOrder::product() const {
    mpz_class result = 1;
    mpz_class power;
    for (const auto& [prime, exp] : factors) {
        mpz_ui_pow_ui(power.get_mpz_t(), prime, exp);
        result *= power;
    }
    return result;
}

std::vector<Prime> FactoredOrder::primes() const {
    std::vector<Prime> out;
    out.reserve(factors.size());
    for (const auto& entry : factors) out.push_back(entry.first);
    return out;
}

FactoredOrder constrained_factor(const mpz_class& n, const PrimeSet& pi) {
    if (n <= 0) throw std::domain_error("constrained_factor needs a positive integer");
    FactoredOrder out;
    mpz_class cofactor = n;
    const auto primes = pi.primes();

    // Primes are tested in batches whose product fits in one limb, so a
    // large cofactor is scanned once per batch instead of once per prime.
    std::size_t i = 0;
    while (i < primes.size() && cofactor != 1) {
        if (cofactor < primes[i]) break;
        std::size_t end = i;
        std::uint64_t modulus = 1;
        while (end < primes.size() && primes[end] < (std::uint64_t{1} << 32) &&
               static_cast<u128>(modulus) * primes[end] <= UINT64_MAX) {
            modulus *= primes[end];
            ++end;
        }
        if (end == i) {
            // Single prime too large to batch.
            const Prime r = primes[i];
            mpz_class rz;
            mpz_import(rz.get_mpz_t(), 1, 1, sizeof r, 0, 0, &r);
            const auto exp = mpz_remove(cofactor.get_mpz_t(), cofactor.get_mpz_t(), rz.get_mpz_t());
            if (exp > 0) out.factors[r] = exp;
            ++i;
            continue;
        }
        const std::uint64_t residue = mpz_tdiv_ui(cofactor.get_mpz_t(), modulus);
        for (std::size_t j = i; j < end; ++j) {
            const Prime r = primes[j];
            if (residue % r != 0) continue;
            mpz_class rz(static_cast<unsigned long>(r));
            const auto exp = mpz_remove(cofactor.get_mpz_t(), cofactor.get_mpz_t(), rz.get_mpz_t());
            out.factors[r] = exp;
        }
        i = end;
    }
    out.leftover = cofactor;
    return out;
}

unsigned long legendre_valuation(std::uint64_t n, Prime p) {
    unsigned long v = 0;
    while (n) {
        n /= p;
        v += n;
    }
    return v;
}

}  // namespace sspec
