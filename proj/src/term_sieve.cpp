#include "sspec/term_sieve.hpp"

#include <cmath>
#include <string>

namespace sspec {

namespace {

using u128 = unsigned __int128;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = static_cast<std::uint64_t>(static_cast<u128>(result) * base % m);
        base = static_cast<std::uint64_t>(static_cast<u128>(base) * base % m);
        exp >>= 1;
    }
    return result;
}

unsigned long valuation(std::uint64_t n, std::uint64_t r) {
    unsigned long v = 0;
    while (n % r == 0) {
        n /= r;
        ++v;
    }
    return v;
}

// v_r(p^o - 1) for r odd with ord_r(p) = o.
unsigned long base_valuation(Prime p, Prime r, std::uint64_t o) {
    std::uint64_t modulus = r;
    unsigned long depth = 1;
    while (static_cast<u128>(modulus) * r < (u128{1} << 63)) {
        modulus *= r;
        ++depth;
    }
    const std::uint64_t x = pow_mod(p, o, modulus);
    if (x != 1) return valuation((x + modulus - 1) % modulus, r);
    // Valuation at least `depth`: settle it exactly.
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), p, o);
    v -= 1;
    const mpz_class rz(static_cast<unsigned long>(r));
    return mpz_remove(v.get_mpz_t(), v.get_mpz_t(), rz.get_mpz_t());
}

void divisors_of(std::uint64_t m, std::vector<std::uint64_t>& out) {
    out.assign(1, 1);
    for (std::uint64_t s = 2; s * s <= m; ++s) {
        if (m % s != 0) continue;
        unsigned e = 0;
        while (m % s == 0) {
            m /= s;
            ++e;
        }
        const std::size_t base = out.size();
        std::uint64_t power = 1;
        for (unsigned i = 0; i < e; ++i) {
            power *= s;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
        }
    }
    if (m > 1) {
        const std::size_t base = out.size();
        for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * m);
    }
}

}  // namespace

CharacteristicSieve::CharacteristicSieve(Prime p, const PrimeSet& pi) : p_(p), log_p_(std::log(double(p))) {
    for (Prime r : pi.primes()) {
        if (r == p) continue;
        Divisor d{r, std::log(double(r)), multiplicative_order(p, r), 0};
        if (r == 2) {
            v2_minus_ = valuation(p - 1, 2);
            v2_plus_ = valuation(p + 1, 2);
        } else {
            d.base_valuation = base_valuation(p, r, d.order);
        }
        t_bound_ = std::max(t_bound_, d.order);
        by_order_[d.order].push_back(static_cast<std::uint32_t>(divisors_.size()));
        divisors_.push_back(d);
    }
}

unsigned long CharacteristicSieve::valuation_minus(const Divisor& d, std::uint64_t m) const {
    if (d.r == 2) {
        if (m % 2 == 1) return v2_minus_;
        return v2_minus_ + v2_plus_ + valuation(m, 2) - 1;
    }
    return d.base_valuation + valuation(m / d.order, d.r);
}

double CharacteristicSieve::pi_log_minus(std::uint64_t m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    thread_local std::vector<std::uint64_t> divs;
    divisors_of(m, divs);
    double total = 0.0;
    for (std::uint64_t e : divs) {
        auto it = by_order_.find(e);
        if (it == by_order_.end()) continue;
        for (std::uint32_t idx : it->second) {
            const Divisor& d = divisors_[idx];
            total += static_cast<double>(valuation_minus(d, m)) * d.log_r;
        }
    }
    memo_.emplace(m, total);
    return total;
}

double CharacteristicSieve::checked(double full, double pi_part) const {
    const double rough = full - pi_part;
    if (rough < -kSmoothThreshold) {
        throw InternalError("pi-part exceeds the number itself for characteristic " + std::to_string(p_));
    }
    return rough < 0.0 ? 0.0 : rough;
}

double CharacteristicSieve::rough_log_minus(std::uint64_t m) {
    const double x = static_cast<double>(m) * log_p_;
    const double full = x + std::log1p(-std::exp(-x));
    return checked(full, pi_log_minus(m));
}

double CharacteristicSieve::rough_log_plus(std::uint64_t m) {
    const double x = static_cast<double>(m) * log_p_;
    const double full = x + std::log1p(std::exp(-x));
    return checked(full, pi_log_minus(2 * m) - pi_log_minus(m));
}

}  // namespace sspec
