#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sspec/order_kernel.hpp"
#include "sspec/prime_engine.hpp"

namespace sspec {

// Decides pi-smoothness of p^m -+ 1 without building the integers.
//
// A prime r != p divides p^m - 1 iff ord_r(p) | m, and its exact
// valuation follows from the lifting-the-exponent lemma. Summing
// v_r * log r over those r gives the log of the pi-part; the number is
// pi-smooth iff that equals log(p^m - 1). The remaining gap (the "rough
// log") is either ~0 or at least log 2, so a 0.5 threshold is exact.
class CharacteristicSieve {
public:
    CharacteristicSieve(Prime p, const PrimeSet& pi);

    Prime characteristic() const { return p_; }
    // max ord_r(p) over r in pi \ {p}
    std::uint64_t t_bound() const { return t_bound_; }

    // log of the non-pi part of p^m - 1 and p^m + 1.
    double rough_log_minus(std::uint64_t m);
    double rough_log_plus(std::uint64_t m);
    // Same for q^d -+ 1 with q = p^k.
    double rough_log(std::uint32_t k, PowerTerm term) {
        const std::uint64_t m = std::uint64_t{k} * term.d;
        return term.plus ? rough_log_plus(m) : rough_log_minus(m);
    }

    bool smooth_minus(std::uint64_t m) { return rough_log_minus(m) < kSmoothThreshold; }
    bool smooth(std::uint32_t k, PowerTerm term) { return rough_log(k, term) < kSmoothThreshold; }

    static constexpr double kSmoothThreshold = 0.5;

private:
    struct Divisor {
        Prime r;
        double log_r;
        std::uint64_t order;
        unsigned long base_valuation;  // v_r(p^order - 1)
    };

    double pi_log_minus(std::uint64_t m);
    unsigned long valuation_minus(const Divisor& d, std::uint64_t m) const;
    double checked(double full, double pi_part) const;

    Prime p_;
    double log_p_;
    std::uint64_t t_bound_ = 0;
    std::vector<Divisor> divisors_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_order_;
    std::unordered_map<std::uint64_t, double> memo_;
    // p odd: v_2(p - 1) and v_2(p + 1)
    unsigned long v2_minus_ = 0, v2_plus_ = 0;
};

}  // namespace sspec
