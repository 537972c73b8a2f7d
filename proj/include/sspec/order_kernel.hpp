#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "sspec/prime_engine.hpp"

namespace sspec {

// Raised when an order formula produces an impossible factorisation
// (negative exponent, inexact division). Always a catalog bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class Family : std::uint8_t {
    Alternating,
    Sporadic,
    L,
    U,
    S,
    O_odd,
    O_plus,
    O_minus,
    G2,
    F4,
    E6,
    E7,
    E8,
    TwE6,  // 2E6
    ThD4,  // 3D4
    Sz,    // 2B2
    TwG2,  // 2G2
    TwF4,  // 2F4
};

inline constexpr std::array kLieFamilies = {
    Family::L,  Family::U,  Family::S,  Family::O_odd, Family::O_plus, Family::O_minus,
    Family::G2, Family::F4, Family::E6, Family::E7,    Family::E8,     Family::TwE6,
    Family::ThD4, Family::Sz, Family::TwG2, Family::TwF4,
};

// The 26 sporadic groups followed by the Tits group 2F4(2)'.
enum class SporadicGroup : std::uint8_t {
    M11, M12, J1, M22, J2, M23, HS, J3, M24, McL, He, Ru, Suz, ON,
    Co3, Co2, Fi22, HN, Ly, Th, Fi23, Co1, J4, Fi24, B, M, Tits,
};
inline constexpr std::uint32_t kFixedOrderCount = 27;

// One candidate group. `n` is the alternating degree, the sporadic index,
// or the Atlas subscript (L_n, U_n, S_2m, O_2m+1, O+-_2m, and the fixed
// subscripts 2,4,6,7,8 of the exceptional families). q = p^k.
struct GroupId {
    Family family = Family::Alternating;
    std::uint32_t n = 0;
    Prime p = 0;
    std::uint32_t k = 0;

    static GroupId alternating(std::uint32_t degree) { return {Family::Alternating, degree, 0, 0}; }
    static GroupId sporadic(SporadicGroup g) {
        return {Family::Sporadic, static_cast<std::uint32_t>(g), 0, 0};
    }
    static GroupId lie(Family f, std::uint32_t subscript, Prime p, std::uint32_t k) {
        return {f, subscript, p, k};
    }

    bool is_lie() const { return family != Family::Alternating && family != Family::Sporadic; }

    auto operator<=>(const GroupId&) const = default;
};

// A factor q^d - 1 (plus == false) or q^d + 1 (plus == true).
struct PowerTerm {
    std::uint32_t d;
    bool plus;
    bool operator==(const PowerTerm&) const = default;
};

enum class CenterRule : std::uint8_t {
    One,
    GcdRankPlusOneQMinus1,  // (n, q-1), L_n
    GcdRankPlusOneQPlus1,   // (n, q+1), U_n
    Gcd2QMinus1,            // (2, q-1)
    Gcd4QlMinus1,           // (4, q^l - 1)
    Gcd4QlPlus1,            // (4, q^l + 1)
    Gcd3QMinus1,            // (3, q-1)
    Gcd3QPlus1,             // (3, q+1)
};

// Order formula of one Lie family, as a function of the Lie rank l:
//   |G| = q^{q_power(l)} * prod terms(l) / prod divide_terms(l) / center.
// Classical families describe their rank-dependent factors through
// `ranged`; exceptional ones list them in `fixed_terms`.
struct FamilySpec {
    struct RangedTerms {
        bool present = false;
        std::uint32_t first = 0;   // i runs over [first, l + last_offset]
        std::int32_t last_offset = 0;
        std::uint32_t d_mul = 1;   // term exponent d = d_mul * i
        bool alternating_sign = false;  // q^i - (-1)^i instead of q^d - 1
    };

    Family family;
    std::string_view atlas_prefix;
    // subscript = sub_mul * l + sub_add (for classical families)
    std::uint32_t sub_mul;
    std::int32_t sub_add;
    std::uint32_t fixed_rank;        // 0 for classical families
    std::uint32_t untwisted_rank;    // ambient rank for fixed families
    std::uint32_t min_rank;          // structural minimum
    std::uint32_t min_simple_rank;   // simplicity / canonical range
    // q_power(l) = (qp2 * l^2 + qp1 * l + qp0) / 2
    std::int32_t qp2, qp1, qp0;
    RangedTerms ranged;
    std::vector<PowerTerm> fixed_terms;
    // O+- carry the extra factor q^l -+ 1.
    bool rank_term = false;
    bool rank_term_plus = false;
    std::vector<PowerTerm> divide_terms;
    CenterRule center;
    Prime required_characteristic = 0;  // 0: any
    bool odd_k_only = false;
    bool odd_q_only = false;
    std::uint64_t min_simple_q = 2;

    std::uint32_t rank_of_subscript(std::uint32_t subscript) const;
    std::uint32_t subscript_of_rank(std::uint32_t rank) const;
    std::uint64_t q_power(std::uint32_t rank) const;
    std::vector<PowerTerm> terms(std::uint32_t rank) const;
    // Rank of the untwisted root system bounding this group in enumeration.
    std::uint32_t ambient_rank(std::uint32_t rank) const {
        return fixed_rank == 0 ? rank : untwisted_rank;
    }
};

const FamilySpec& family_spec(Family f);

std::string_view family_name(Family f);
std::string_view sporadic_name(SporadicGroup g);

// Exact factorisation of a sporadic (or Tits) group order.
const std::vector<std::pair<Prime, unsigned long>>& sporadic_factors(SporadicGroup g);
mpz_class sporadic_order(SporadicGroup g);

bool is_structurally_valid(const GroupId& id);
// Parameters name a simple group (no canonical-representative check).
bool is_simple(const GroupId& id);
// Representative of the isomorphism class of a simple group id.
GroupId canonical_representative(const GroupId& id);
bool is_admissible(const GroupId& id);
// Every other structurally valid id isomorphic to `id`.
std::vector<GroupId> aliases_of(const GroupId& id);

// Lie rank l of a Lie-type id (the ambient untwisted rank for twisted
// families); 0 otherwise.
std::uint32_t lie_rank(const GroupId& id);

mpz_class field_size(const GroupId& id);
mpz_class group_order(const GroupId& id);

std::string canonical_name(const GroupId& id);
// Atlas-style name of any structurally valid id, admissible or not.
std::string atlas_name(const GroupId& id);

struct GroupRecord {
    GroupId id;
    std::string canonical_name;
    std::vector<GroupId> aliases;
    std::vector<Prime> spectrum;
    Prime max_prime = 0;
    std::size_t spectrum_size = 0;
    FactoredOrder order_factors;

    bool operator==(const GroupRecord&) const = default;
};

// Factorises |G| term by term over pi. Returns nullopt (rejected) as soon
// as one factor is not pi-smooth.
std::optional<GroupRecord> spectrum(const GroupId& id, const PrimeSet& pi);

}  // namespace sspec
