#include "circpow/integer_eigs.hpp"

#include <numeric>
#include <string>

namespace circpow {

namespace {

bool is_prime(std::int64_t p)
{
    if (p < 2) return false;
    for (std::int64_t f = 2; f * f <= p; ++f) {
        if (p % f == 0) return false;
    }
    return true;
}

TheoremParams params_for(const CircuitPower& g)
{
    const auto n = g.n();
    const auto d = g.d();
    return {gcd(n, d), gcd(n, d + 1), ord(2, n), ord(2, d), ord(2, d + 1)};
}

struct CaseValue {
    bool holds;
    std::int64_t value;
    EigCase tag;
};

// The first holding case wins the label; any other holding case must agree
// on the value.
IntegerEigReport resolve(std::int64_t eigenvalue, const TheoremParams& p, std::initializer_list<CaseValue> cases,
                         const CircuitPower& g)
{
    const CaseValue* chosen = nullptr;
    for (const auto& c : cases) {
        if (!c.holds) continue;
        if (chosen == nullptr) {
            chosen = &c;
        } else if (c.value != chosen->value) {
            throw std::logic_error("ambiguous multiplicity for eigenvalue " + std::to_string(eigenvalue) + " of "
                                   + g.name() + ": " + std::string(to_string(chosen->tag)) + " gives "
                                   + std::to_string(chosen->value) + ", " + std::string(to_string(c.tag)) + " gives "
                                   + std::to_string(c.value));
        }
    }
    if (chosen == nullptr) {
        throw std::logic_error("no multiplicity case covers eigenvalue " + std::to_string(eigenvalue) + " of "
                               + g.name());
    }
    return {eigenvalue, chosen->value, chosen->tag, p};
}

} // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b)
{
    return std::gcd(a, b);
}

int ord(std::int64_t p, std::int64_t n)
{
    if (!is_prime(p)) throw std::domain_error("ord: " + std::to_string(p) + " is not prime");
    if (n < 1) throw std::domain_error("ord: n must be positive");
    int j = 0;
    while (n % p == 0) {
        n /= p;
        ++j;
    }
    return j;
}

std::string_view to_string(EigCase c)
{
    switch (c) {
    case EigCase::regular_degree: return "regular degree 2d";
    case EigCase::minus_one: return "gcd(2d+1,n)-1";
    case EigCase::nullity_ord_ge: return "ord2(d+1)>=ord2(n)";
    case EigCase::nullity_odd_d: return "ord2(d+1)<ord2(n), d odd";
    case EigCase::nullity_even_n_even_d: return "2|n, 2|d";
    case EigCase::minus_two_ord_ge: return "ord2(d)>=ord2(n)";
    case EigCase::minus_two_even_d: return "ord2(d)<ord2(n), 2|d";
    case EigCase::minus_two_even_n_odd_d: return "2|n, d odd";
    case EigCase::minus_two_cycle: return "d=1 cycle: 2|n";
    case EigCase::one_present: return "6|n, d=1 mod 6";
    case EigCase::one_absent: return "not (6|n, d=1 mod 6)";
    case EigCase::minus_three_present: return "6|n, d=4 mod 6";
    case EigCase::minus_three_absent: return "not (6|n, d=4 mod 6)";
    }
    return "unknown";
}

IntegerEigReport mult_regular(const CircuitPower& g)
{
    g.require_non_complete();
    return {2 * g.d(), 1, EigCase::regular_degree, params_for(g)};
}

IntegerEigReport mult_minus_one(const CircuitPower& g)
{
    g.require_non_complete();
    auto p = params_for(g);
    p.g = gcd(2 * g.d() + 1, g.n());
    return {-1, p.g - 1, EigCase::minus_one, p};
}

IntegerEigReport nullity(const CircuitPower& g)
{
    g.require_non_complete();
    const auto p = params_for(g);
    const bool n_even = g.n() % 2 == 0;
    const bool d_even = g.d() % 2 == 0;
    return resolve(0, p,
                   {
                       {p.ord2_d1 >= p.ord2_n, p.g - 1, EigCase::nullity_ord_ge},
                       {p.ord2_d1 < p.ord2_n && !d_even, p.g + p.h - 1, EigCase::nullity_odd_d},
                       {n_even && d_even, p.g + p.h - 2, EigCase::nullity_even_n_even_d},
                   },
                   g);
}

IntegerEigReport mult_minus_two(const CircuitPower& g)
{
    g.require_non_complete();
    const auto p = params_for(g);
    const bool n_even = g.n() % 2 == 0;
    const bool d_even = g.d() % 2 == 0;
    if (g.d() == 1) {
        return {-2, n_even ? 1 : 0, EigCase::minus_two_cycle, p};
    }
    return resolve(-2, p,
                   {
                       {p.ord2_d >= p.ord2_n, p.h - 1, EigCase::minus_two_ord_ge},
                       {p.ord2_d < p.ord2_n && d_even, p.g + p.h - 1, EigCase::minus_two_even_d},
                       {n_even && !d_even, p.g + p.h - 2, EigCase::minus_two_even_n_odd_d},
                   },
                   g);
}

IntegerEigReport mult_one(const CircuitPower& g)
{
    g.require_non_complete();
    const bool present = g.n() % 6 == 0 && g.d() % 6 == 1;
    return {1, present ? 2 : 0, present ? EigCase::one_present : EigCase::one_absent, params_for(g)};
}

IntegerEigReport mult_minus_three(const CircuitPower& g)
{
    g.require_non_complete();
    const bool present = g.n() % 6 == 0 && g.d() % 6 == 4;
    return {-3, present ? 2 : 0, present ? EigCase::minus_three_present : EigCase::minus_three_absent,
            params_for(g)};
}

std::vector<IntegerEigReport> integer_spectrum(const CircuitPower& g)
{
    return {mult_regular(g), mult_one(g), nullity(g), mult_minus_one(g), mult_minus_two(g), mult_minus_three(g)};
}

bool is_integer_candidate(const CircuitPower& g, std::int64_t eigenvalue)
{
    return eigenvalue == 2 * g.d() || (eigenvalue >= -3 && eigenvalue <= 1);
}

IntegerEigReport integer_multiplicity(const CircuitPower& g, std::int64_t eigenvalue)
{
    g.require_non_complete();
    if (eigenvalue == 2 * g.d()) return mult_regular(g);
    switch (eigenvalue) {
    case 1: return mult_one(g);
    case 0: return nullity(g);
    case -1: return mult_minus_one(g);
    case -2: return mult_minus_two(g);
    case -3: return mult_minus_three(g);
    default: break;
    }
    throw std::domain_error(std::to_string(eigenvalue) + " is never an eigenvalue of " + g.name());
}

IntegralityVerdict is_integral(const CirculantGraph& g)
{
    const auto n = g.order();
    std::vector<bool> checked(static_cast<std::size_t>(n), false);
    for (auto j : g.jumps()) {
        const auto divisor = gcd(j, n);
        if (checked[static_cast<std::size_t>(divisor)]) continue;
        checked[static_cast<std::size_t>(divisor)] = true;
        std::vector<std::int64_t> members;
        std::int64_t missing = 0;
        for (std::int64_t k = divisor; k < n; k += divisor) {
            if (gcd(k, n) != divisor) continue;
            members.push_back(k);
            if (missing == 0 && !g.has_jump(k)) missing = k;
        }
        if (missing != 0) return {false, GcdClass{divisor, std::move(members), missing}};
    }
    return {true, std::nullopt};
}

} // namespace circpow
