#include "sspec/order_kernel.hpp"

#include <algorithm>
#include <numeric>

namespace sspec {

namespace {

using Terms = std::vector<PowerTerm>;

constexpr PowerTerm minus(std::uint32_t d) { return {d, false}; }
constexpr PowerTerm plus(std::uint32_t d) { return {d, true}; }

FamilySpec classical(Family f, std::string_view prefix, std::uint32_t sub_mul, std::int32_t sub_add,
                     std::uint32_t min_rank, std::uint32_t min_simple_rank, std::int32_t qp2,
                     std::int32_t qp1, FamilySpec::RangedTerms ranged, CenterRule center) {
    FamilySpec s{};
    s.family = f;
    s.atlas_prefix = prefix;
    s.sub_mul = sub_mul;
    s.sub_add = sub_add;
    s.fixed_rank = 0;
    s.untwisted_rank = 0;
    s.min_rank = min_rank;
    s.min_simple_rank = min_simple_rank;
    s.qp2 = qp2;
    s.qp1 = qp1;
    s.qp0 = 0;
    s.ranged = ranged;
    s.center = center;
    return s;
}

FamilySpec exceptional(Family f, std::string_view prefix, std::uint32_t rank, std::uint32_t untwisted,
                       std::int32_t q_power, Terms terms, CenterRule center) {
    FamilySpec s{};
    s.family = f;
    s.atlas_prefix = prefix;
    s.sub_mul = 0;
    s.sub_add = static_cast<std::int32_t>(rank);
    s.fixed_rank = rank;
    s.untwisted_rank = untwisted;
    s.min_rank = rank;
    s.min_simple_rank = rank;
    s.qp2 = 0;
    s.qp1 = 0;
    s.qp0 = 2 * q_power;
    s.fixed_terms = std::move(terms);
    s.center = center;
    return s;
}

std::vector<FamilySpec> build_catalog() {
    std::vector<FamilySpec> c;
    c.push_back(classical(Family::L, "L", 1, 1, 1, 1, 1, 1, {true, 2, 1, 1, false},
                          CenterRule::GcdRankPlusOneQMinus1));
    c.push_back(classical(Family::U, "U", 1, 1, 1, 2, 1, 1, {true, 2, 1, 1, true},
                          CenterRule::GcdRankPlusOneQPlus1));
    c.push_back(classical(Family::S, "S", 2, 0, 1, 2, 2, 0, {true, 1, 0, 2, false}, CenterRule::Gcd2QMinus1));
    auto o_odd = classical(Family::O_odd, "O", 2, 1, 1, 3, 2, 0, {true, 1, 0, 2, false},
                           CenterRule::Gcd2QMinus1);
    o_odd.odd_q_only = true;
    c.push_back(o_odd);
    auto o_plus = classical(Family::O_plus, "O+", 2, 0, 2, 4, 2, -2, {true, 1, -1, 2, false},
                            CenterRule::Gcd4QlMinus1);
    o_plus.rank_term = true;
    c.push_back(o_plus);
    auto o_minus = classical(Family::O_minus, "O-", 2, 0, 2, 4, 2, -2, {true, 1, -1, 2, false},
                             CenterRule::Gcd4QlPlus1);
    o_minus.rank_term = true;
    o_minus.rank_term_plus = true;
    c.push_back(o_minus);

    auto g2 = exceptional(Family::G2, "G2", 2, 2, 6, {minus(6), minus(2)}, CenterRule::One);
    g2.min_simple_q = 3;
    c.push_back(g2);
    c.push_back(exceptional(Family::F4, "F4", 4, 4, 24, {minus(12), minus(8), minus(6), minus(2)},
                            CenterRule::One));
    c.push_back(exceptional(Family::E6, "E6", 6, 6, 36,
                            {minus(12), minus(9), minus(8), minus(6), minus(5), minus(2)},
                            CenterRule::Gcd3QMinus1));
    c.push_back(exceptional(Family::E7, "E7", 7, 7, 63,
                            {minus(18), minus(14), minus(12), minus(10), minus(8), minus(6), minus(2)},
                            CenterRule::Gcd2QMinus1));
    c.push_back(exceptional(
        Family::E8, "E8", 8, 8, 120,
        {minus(30), minus(24), minus(20), minus(18), minus(14), minus(12), minus(8), minus(2)},
        CenterRule::One));
    c.push_back(exceptional(Family::TwE6, "2E6", 6, 6, 36,
                            {minus(12), plus(9), minus(8), minus(6), plus(5), minus(2)},
                            CenterRule::Gcd3QPlus1));
    // q^8 + q^4 + 1 = (q^12 - 1) / (q^4 - 1)
    auto d4 = exceptional(Family::ThD4, "3D4", 4, 4, 12, {minus(12), minus(6), minus(2)}, CenterRule::One);
    d4.divide_terms = {minus(4)};
    c.push_back(d4);
    auto sz = exceptional(Family::Sz, "Sz", 2, 2, 2, {plus(2), minus(1)}, CenterRule::One);
    sz.required_characteristic = 2;
    sz.odd_k_only = true;
    sz.min_simple_q = 8;
    c.push_back(sz);
    auto ree = exceptional(Family::TwG2, "2G2", 2, 2, 3, {plus(3), minus(1)}, CenterRule::One);
    ree.required_characteristic = 3;
    ree.odd_k_only = true;
    ree.min_simple_q = 27;
    c.push_back(ree);
    auto f4 = exceptional(Family::TwF4, "2F4", 4, 4, 12, {plus(6), minus(4), plus(3), minus(1)},
                          CenterRule::One);
    f4.required_characteristic = 2;
    f4.odd_k_only = true;
    f4.min_simple_q = 8;
    c.push_back(f4);
    return c;
}

const std::vector<FamilySpec>& catalog() {
    static const std::vector<FamilySpec> table = build_catalog();
    return table;
}

struct SporadicEntry {
    std::string_view name;
    std::string_view order;
    std::vector<std::pair<Prime, unsigned long>> factors;
};

const std::vector<SporadicEntry>& sporadic_table() {
    static const std::vector<SporadicEntry> table = {
        {"M11", "7920", {{2, 4}, {3, 2}, {5, 1}, {11, 1}}},
        {"M12", "95040", {{2, 6}, {3, 3}, {5, 1}, {11, 1}}},
        {"J1", "175560", {{2, 3}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {19, 1}}},
        {"M22", "443520", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}},
        {"J2", "604800", {{2, 7}, {3, 3}, {5, 2}, {7, 1}}},
        {"M23", "10200960", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
        {"HS", "44352000", {{2, 9}, {3, 2}, {5, 3}, {7, 1}, {11, 1}}},
        {"J3", "50232960", {{2, 7}, {3, 5}, {5, 1}, {17, 1}, {19, 1}}},
        {"M24", "244823040", {{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
        {"McL", "898128000", {{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}}},
        {"He", "4030387200", {{2, 10}, {3, 3}, {5, 2}, {7, 3}, {17, 1}}},
        {"Ru", "145926144000", {{2, 14}, {3, 3}, {5, 3}, {7, 1}, {13, 1}, {29, 1}}},
        {"Suz", "448345497600", {{2, 13}, {3, 7}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}},
        {"O'N", "460815505920", {{2, 9}, {3, 4}, {5, 1}, {7, 3}, {11, 1}, {19, 1}, {31, 1}}},
        {"Co3", "495766656000", {{2, 10}, {3, 7}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}},
        {"Co2", "42305421312000", {{2, 18}, {3, 6}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}},
        {"Fi22", "64561751654400", {{2, 17}, {3, 9}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}},
        {"HN", "273030912000000", {{2, 14}, {3, 6}, {5, 6}, {7, 1}, {11, 1}, {19, 1}}},
        {"Ly", "51765179004000000", {{2, 8}, {3, 7}, {5, 6}, {7, 1}, {11, 1}, {31, 1}, {37, 1}, {67, 1}}},
        {"Th", "90745943887872000", {{2, 15}, {3, 10}, {5, 3}, {7, 2}, {13, 1}, {19, 1}, {31, 1}}},
        {"Fi23", "4089470473293004800",
         {{2, 18}, {3, 13}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {23, 1}}},
        {"Co1", "4157776806543360000", {{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}}},
        {"J4", "86775571046077562880",
         {{2, 21}, {3, 3}, {5, 1}, {7, 1}, {11, 3}, {23, 1}, {29, 1}, {31, 1}, {37, 1}, {43, 1}}},
        {"Fi24'", "1255205709190661721292800",
         {{2, 21}, {3, 16}, {5, 2}, {7, 3}, {11, 1}, {13, 1}, {17, 1}, {23, 1}, {29, 1}}},
        {"B", "4154781481226426191177580544000000",
         {{2, 41}, {3, 13}, {5, 6}, {7, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {31, 1}, {47, 1}}},
        {"M", "808017424794512875886459904961710757005754368000000000",
         {{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1}, {19, 1}, {23, 1}, {29, 1},
          {31, 1}, {41, 1}, {47, 1}, {59, 1}, {71, 1}}},
        {"2F4(2)'", "17971200", {{2, 11}, {3, 3}, {5, 2}, {13, 1}}},
    };
    return table;
}

mpz_class pow_mpz(const mpz_class& base, std::uint64_t exp) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

mpz_class term_value(const mpz_class& q, PowerTerm t) {
    mpz_class v = pow_mpz(q, t.d);
    if (t.plus) {
        v += 1;
    } else {
        v -= 1;
    }
    return v;
}

std::uint64_t center_divisor(const FamilySpec& spec, std::uint32_t rank, const mpz_class& q) {
    auto gcd_with = [](std::uint64_t a, const mpz_class& b) {
        return mpz_gcd_ui(nullptr, b.get_mpz_t(), a);
    };
    switch (spec.center) {
        case CenterRule::One:
            return 1;
        case CenterRule::GcdRankPlusOneQMinus1:
            return gcd_with(rank + 1, q - 1);
        case CenterRule::GcdRankPlusOneQPlus1:
            return gcd_with(rank + 1, q + 1);
        case CenterRule::Gcd2QMinus1:
            return gcd_with(2, q - 1);
        case CenterRule::Gcd4QlMinus1:
            return gcd_with(4, pow_mpz(q, rank) - 1);
        case CenterRule::Gcd4QlPlus1:
            return gcd_with(4, pow_mpz(q, rank) + 1);
        case CenterRule::Gcd3QMinus1:
            return gcd_with(3, q - 1);
        case CenterRule::Gcd3QPlus1:
            return gcd_with(3, q + 1);
    }
    return 1;
}

void require_valid(const GroupId& id) {
    if (!is_structurally_valid(id)) throw std::domain_error("structurally invalid group id");
}

std::string field_string(Prime p, std::uint32_t k) {
    const mpz_class q = pow_mpz(mpz_class(static_cast<unsigned long>(p)), k);
    if (k == 1 || q <= 100) return q.get_str();
    return std::to_string(p) + "^" + std::to_string(k);
}

void subtract_exponents(FactoredOrder& into, const FactoredOrder& what) {
    for (const auto& [prime, exp] : what.factors) {
        auto it = into.factors.find(prime);
        if (it == into.factors.end() || it->second < exp) {
            throw InternalError("negative exponent of " + std::to_string(prime) + " while dividing order");
        }
        it->second -= exp;
        if (it->second == 0) into.factors.erase(it);
    }
}

void add_exponents(FactoredOrder& into, const FactoredOrder& what) {
    for (const auto& [prime, exp] : what.factors) into.factors[prime] += exp;
}

GroupRecord make_record(const GroupId& id, FactoredOrder factors) {
    GroupRecord rec;
    rec.id = id;
    rec.canonical_name = is_simple(id) ? atlas_name(canonical_representative(id)) : atlas_name(id);
    rec.aliases = aliases_of(id);
    rec.order_factors = std::move(factors);
    rec.spectrum = rec.order_factors.primes();
    rec.spectrum_size = rec.spectrum.size();
    rec.max_prime = rec.spectrum.empty() ? 0 : rec.spectrum.back();
    return rec;
}

}  // namespace

std::uint32_t FamilySpec::rank_of_subscript(std::uint32_t subscript) const {
    if (fixed_rank != 0) return fixed_rank;
    return static_cast<std::uint32_t>((static_cast<std::int64_t>(subscript) - sub_add) / sub_mul);
}

std::uint32_t FamilySpec::subscript_of_rank(std::uint32_t rank) const {
    if (fixed_rank != 0) return fixed_rank;
    return static_cast<std::uint32_t>(static_cast<std::int64_t>(sub_mul) * rank + sub_add);
}

std::uint64_t FamilySpec::q_power(std::uint32_t rank) const {
    const std::int64_t l = rank;
    return static_cast<std::uint64_t>((qp2 * l * l + qp1 * l + qp0) / 2);
}

std::vector<PowerTerm> FamilySpec::terms(std::uint32_t rank) const {
    std::vector<PowerTerm> out = fixed_terms;
    if (ranged.present) {
        const std::int64_t last = static_cast<std::int64_t>(rank) + ranged.last_offset;
        for (std::int64_t i = ranged.first; i <= last; ++i) {
            const auto d = static_cast<std::uint32_t>(ranged.d_mul * i);
            out.push_back({d, ranged.alternating_sign && (i % 2 == 1)});
        }
    }
    if (rank_term) out.push_back({rank, rank_term_plus});
    return out;
}

const FamilySpec& family_spec(Family f) {
    for (const auto& spec : catalog()) {
        if (spec.family == f) return spec;
    }
    throw std::domain_error("family has no order formula");
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Alternating:
            return "A";
        case Family::Sporadic:
            return "Spor";
        default:
            return family_spec(f).atlas_prefix;
    }
}

std::string_view sporadic_name(SporadicGroup g) {
    return sporadic_table().at(static_cast<std::size_t>(g)).name;
}

const std::vector<std::pair<Prime, unsigned long>>& sporadic_factors(SporadicGroup g) {
    return sporadic_table().at(static_cast<std::size_t>(g)).factors;
}

mpz_class sporadic_order(SporadicGroup g) {
    return mpz_class(std::string(sporadic_table().at(static_cast<std::size_t>(g)).order));
}

bool is_structurally_valid(const GroupId& id) {
    switch (id.family) {
        case Family::Alternating:
            return id.n >= 2 && id.p == 0 && id.k == 0;
        case Family::Sporadic:
            return id.n < kFixedOrderCount && id.p == 0 && id.k == 0;
        default:
            break;
    }
    const FamilySpec& spec = family_spec(id.family);
    if (id.k == 0 || !is_prime(id.p)) return false;
    if (spec.required_characteristic != 0 && id.p != spec.required_characteristic) return false;
    if (spec.odd_k_only && id.k % 2 == 0) return false;
    if (spec.fixed_rank != 0) return id.n == spec.fixed_rank;
    const std::int64_t shifted = static_cast<std::int64_t>(id.n) - spec.sub_add;
    if (shifted <= 0 || shifted % spec.sub_mul != 0) return false;
    return static_cast<std::uint32_t>(shifted / spec.sub_mul) >= spec.min_rank;
}

bool is_simple(const GroupId& id) {
    if (!is_structurally_valid(id)) return false;
    if (id.family == Family::Alternating) return id.n >= 5;
    if (id.family == Family::Sporadic) return true;
    const FamilySpec& spec = family_spec(id.family);
    if (spec.rank_of_subscript(id.n) < spec.min_simple_rank) return false;
    const mpz_class q = field_size(id);
    if (q < spec.min_simple_q) return false;
    if (spec.odd_q_only && id.p == 2) return true;  // simple, but isomorphic to S_{n-1}(q)
    if (id.family == Family::L && id.n == 2 && q <= 3) return false;
    if (id.family == Family::U && id.n == 3 && q == 2) return false;
    if (id.family == Family::S && id.n == 4 && q == 2) return false;
    return true;
}

GroupId canonical_representative(const GroupId& id) {
    if (!is_simple(id)) throw std::domain_error("not a simple group id");
    const auto is = [&](Family f, std::uint32_t n, Prime p, std::uint32_t k) {
        return id == GroupId::lie(f, n, p, k);
    };
    if (is(Family::L, 2, 2, 2) || is(Family::L, 2, 5, 1)) return GroupId::alternating(5);
    if (is(Family::L, 2, 3, 2)) return GroupId::alternating(6);
    if (is(Family::L, 4, 2, 1)) return GroupId::alternating(8);
    if (is(Family::L, 3, 2, 1)) return GroupId::lie(Family::L, 2, 7, 1);
    if (is(Family::U, 4, 2, 1)) return GroupId::lie(Family::S, 4, 3, 1);
    if (id.family == Family::O_odd && id.p == 2) return GroupId::lie(Family::S, id.n - 1, id.p, id.k);
    return id;
}

bool is_admissible(const GroupId& id) {
    return is_simple(id) && canonical_representative(id) == id;
}

std::vector<GroupId> aliases_of(const GroupId& id) {
    if (!is_simple(id)) return {};
    const GroupId canon = canonical_representative(id);
    std::vector<GroupId> cls;
    if (canon == GroupId::alternating(5)) {
        cls = {GroupId::lie(Family::L, 2, 2, 2), GroupId::lie(Family::L, 2, 5, 1)};
    } else if (canon == GroupId::alternating(6)) {
        cls = {GroupId::lie(Family::L, 2, 3, 2)};
    } else if (canon == GroupId::alternating(8)) {
        cls = {GroupId::lie(Family::L, 4, 2, 1)};
    } else if (canon == GroupId::lie(Family::L, 2, 7, 1)) {
        cls = {GroupId::lie(Family::L, 3, 2, 1)};
    } else if (canon == GroupId::lie(Family::S, 4, 3, 1)) {
        cls = {GroupId::lie(Family::U, 4, 2, 1)};
    } else if (canon.family == Family::S && canon.p == 2 && canon.n >= 6) {
        cls = {GroupId::lie(Family::O_odd, canon.n + 1, canon.p, canon.k)};
    }
    cls.push_back(canon);
    std::erase(cls, id);
    std::sort(cls.begin(), cls.end());
    return cls;
}

std::uint32_t lie_rank(const GroupId& id) {
    if (!id.is_lie()) return 0;
    const FamilySpec& spec = family_spec(id.family);
    return spec.ambient_rank(spec.rank_of_subscript(id.n));
}

mpz_class field_size(const GroupId& id) {
    if (!id.is_lie()) throw std::domain_error("only Lie-type groups have a defining field");
    return pow_mpz(mpz_class(static_cast<unsigned long>(id.p)), id.k);
}

mpz_class group_order(const GroupId& id) {
    require_valid(id);
    if (id.family == Family::Alternating) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), id.n);
        return f / 2;
    }
    if (id.family == Family::Sporadic) return sporadic_order(static_cast<SporadicGroup>(id.n));

    const FamilySpec& spec = family_spec(id.family);
    const std::uint32_t rank = spec.rank_of_subscript(id.n);
    const mpz_class q = field_size(id);
    mpz_class order = pow_mpz(q, spec.q_power(rank));
    for (PowerTerm t : spec.terms(rank)) order *= term_value(q, t);
    auto divide_exact = [&](const mpz_class& by) {
        if (!mpz_divisible_p(order.get_mpz_t(), by.get_mpz_t())) {
            throw InternalError("inexact division in order formula for " + std::string(spec.atlas_prefix));
        }
        mpz_divexact(order.get_mpz_t(), order.get_mpz_t(), by.get_mpz_t());
    };
    for (PowerTerm t : spec.divide_terms) divide_exact(term_value(q, t));
    divide_exact(mpz_class(static_cast<unsigned long>(center_divisor(spec, rank, q))));
    return order;
}

std::string canonical_name(const GroupId& id) {
    if (!is_admissible(id)) throw std::domain_error("canonical_name needs an admissible group id");
    return atlas_name(id);
}

std::string atlas_name(const GroupId& id) {
    require_valid(id);
    switch (id.family) {
        case Family::Alternating:
            return "A" + std::to_string(id.n);
        case Family::Sporadic:
            return std::string(sporadic_name(static_cast<SporadicGroup>(id.n)));
        default:
            break;
    }
    const FamilySpec& spec = family_spec(id.family);
    std::string out(spec.atlas_prefix);
    if (spec.fixed_rank == 0) out += std::to_string(id.n);
    return out + "(" + field_string(id.p, id.k) + ")";
}

std::optional<GroupRecord> spectrum(const GroupId& id, const PrimeSet& pi) {
    require_valid(id);
    FactoredOrder factors;

    if (id.family == Family::Alternating) {
        // pi(A_n) is every prime <= n; walk pi alongside the true primes.
        Prime expected = 2;
        for (Prime r : pi.primes()) {
            if (r > id.n) break;
            if (r != expected) return std::nullopt;
            factors.factors[r] = legendre_valuation(id.n, r);
            expected = next_prime(expected);
        }
        if (expected <= id.n) return std::nullopt;
        if (auto it = factors.factors.find(2); it != factors.factors.end()) {
            if (--it->second == 0) factors.factors.erase(it);
        }
        if (factors.factors.empty()) return std::nullopt;
        return make_record(id, std::move(factors));
    }

    if (id.family == Family::Sporadic) {
        for (const auto& [prime, exp] : sporadic_factors(static_cast<SporadicGroup>(id.n))) {
            if (!pi.contains(prime)) return std::nullopt;
            factors.factors[prime] = exp;
        }
        return make_record(id, std::move(factors));
    }

    if (!pi.contains(id.p)) return std::nullopt;
    const FamilySpec& spec = family_spec(id.family);
    const std::uint32_t rank = spec.rank_of_subscript(id.n);
    const mpz_class q = field_size(id);
    factors.factors[id.p] = static_cast<unsigned long>(id.k) * spec.q_power(rank);
    // Each divide-term cancels exactly against the first term it divides,
    // so only the true multiplicands (e.g. q^8 + q^4 + 1) get factored.
    std::vector<mpz_class> pending;
    for (PowerTerm t : spec.divide_terms) pending.push_back(term_value(q, t));
    for (PowerTerm t : spec.terms(rank)) {
        mpz_class value = term_value(q, t);
        for (auto it = pending.begin(); it != pending.end();) {
            if (mpz_divisible_p(value.get_mpz_t(), it->get_mpz_t())) {
                mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), it->get_mpz_t());
                it = pending.erase(it);
            } else {
                ++it;
            }
        }
        FactoredOrder part = constrained_factor(value, pi);
        if (!part.smooth()) return std::nullopt;
        add_exponents(factors, part);
    }
    if (!pending.empty()) throw InternalError("divide-term does not divide any factor of the order");
    const std::uint64_t d = center_divisor(spec, rank, q);
    if (d > 1) {
        FactoredOrder part = constrained_factor(mpz_class(static_cast<unsigned long>(d)), pi);
        if (!part.smooth()) throw InternalError("center divisor has a prime outside the spectrum");
        subtract_exponents(factors, part);
    }
    return make_record(id, std::move(factors));
}

}  // namespace sspec
