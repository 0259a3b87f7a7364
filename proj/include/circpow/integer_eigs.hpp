#pragma once

#include "circpow/circulant.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace circpow {

/// p-adic valuation: the largest j with p^j | n. Throws std::domain_error
/// if p is not prime or n < 1.
int ord(std::int64_t p, std::int64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Which case of which multiplicity formula produced a report.
enum class EigCase {
    regular_degree,        // 2d, always simple
    minus_one,             // gcd(2d+1, n) - 1
    nullity_ord_ge,        // ord2(d+1) >= ord2(n): g - 1
    nullity_odd_d,         // ord2(d+1) < ord2(n), d odd: g + h - 1
    nullity_even_n_even_d, // 2 | n, 2 | d: g + h - 2
    minus_two_ord_ge,      // ord2(d) >= ord2(n): h - 1
    minus_two_even_d,      // ord2(d) < ord2(n), d even: g + h - 1
    minus_two_even_n_odd_d,// 2 | n, d odd: g + h - 2
    minus_two_cycle,       // d = 1: -2 is simple iff n is even
    one_present,           // 6 | n and d = 1 mod 6
    one_absent,
    minus_three_present,   // 6 | n and d = 4 mod 6
    minus_three_absent,
};

std::string_view to_string(EigCase c);

struct TheoremParams {
    std::int64_t g = 0; // gcd(n, d), or gcd(2d+1, n) for eigenvalue -1
    std::int64_t h = 0; // gcd(n, d+1)
    int ord2_n = 0;
    int ord2_d = 0;
    int ord2_d1 = 0;

    friend bool operator==(const TheoremParams&, const TheoremParams&) = default;
};

struct IntegerEigReport {
    std::int64_t eigenvalue;
    std::int64_t multiplicity;
    EigCase case_tag;
    TheoremParams params;
};

// All of the following throw CompleteGraphError for complete powers.
IntegerEigReport mult_regular(const CircuitPower& g);
IntegerEigReport mult_minus_one(const CircuitPower& g);
IntegerEigReport nullity(const CircuitPower& g);
/// d = 1 is handled by the cycle fact (tag minus_two_cycle), not the
/// three-case formula, which is stated for d > 1.
IntegerEigReport mult_minus_two(const CircuitPower& g);
IntegerEigReport mult_one(const CircuitPower& g);
IntegerEigReport mult_minus_three(const CircuitPower& g);

/// Reports for 2d, 1, 0, -1, -2, -3 in that order, zero multiplicities kept.
std::vector<IntegerEigReport> integer_spectrum(const CircuitPower& g);

/// Report for a single candidate. Throws std::domain_error for integers
/// outside {-3, -2, -1, 0, 1, 2d}, which are never eigenvalues.
IntegerEigReport integer_multiplicity(const CircuitPower& g, std::int64_t eigenvalue);

/// The candidates {-3, -2, -1, 0, 1, 2d}.
bool is_integer_candidate(const CircuitPower& g, std::int64_t eigenvalue);

struct GcdClass {
    std::int64_t divisor;              // gcd(k, n) shared by the class
    std::vector<std::int64_t> members; // all k in 1..n-1 with that gcd
    std::int64_t missing;              // a member absent from the jump set
};

struct IntegralityVerdict {
    bool integral;
    std::optional<GcdClass> violating_class;
};

/// So's criterion: integral iff the jump set is a union of full gcd classes.
IntegralityVerdict is_integral(const CirculantGraph& g);

} // namespace circpow
