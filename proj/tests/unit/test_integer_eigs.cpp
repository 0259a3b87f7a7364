#include "circpow/circulant.hpp"
#include "circpow/integer_eigs.hpp"
#include "circpow/spectrum.hpp"

#include "../oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace circpow;

namespace {

std::int64_t mult(std::int64_t n, std::int64_t d, std::int64_t lambda)
{
    return integer_multiplicity(CircuitPower(n, d), lambda).multiplicity;
}

} // namespace

TEST(Ord, Values)
{
    EXPECT_EQ(ord(2, 36), 2);
    EXPECT_EQ(ord(2, 14), 1);
    EXPECT_EQ(ord(2, 15), 0);
    EXPECT_EQ(ord(3, 54), 3);
    EXPECT_EQ(ord(2, 1024), 10);
    EXPECT_THROW(ord(4, 16), std::domain_error);
    EXPECT_THROW(ord(1, 16), std::domain_error);
    EXPECT_THROW(ord(2, 0), std::domain_error);
}

TEST(IntegerEigs, C36Power14MinusTwo)
{
    const auto r = integer_multiplicity(CircuitPower(36, 14), -2);
    EXPECT_EQ(r.multiplicity, 4);
    EXPECT_EQ(r.case_tag, EigCase::minus_two_even_d);
    EXPECT_EQ(to_string(r.case_tag), "ord2(d)<ord2(n), 2|d");
    EXPECT_EQ(r.params.g, 2);
    EXPECT_EQ(r.params.h, 3);
    EXPECT_EQ(r.params.ord2_n, 2);
    EXPECT_EQ(r.params.ord2_d, 1);
}

TEST(IntegerEigs, Examples)
{
    EXPECT_EQ(mult(12, 4, -3), 2);
    EXPECT_EQ(mult(12, 1, 1), 2);
    EXPECT_EQ(mult(12, 1, -2), 1);
    EXPECT_EQ(mult(12, 1, 0), 2);
    EXPECT_EQ(mult(10, 2, -1), 4);
    EXPECT_EQ(mult(8, 1, 0), 2);
    EXPECT_EQ(mult(35, 2, -1), 4);
    EXPECT_EQ(mult(20, 3, 0), 0);
    EXPECT_EQ(mult(6, 1, 1), 2);
    // C_9^(2): -2 occurs at r = 3, 6 where (2d+1) r / n = 5/3.
    for (auto lambda : {1, 0, -1, -3}) EXPECT_EQ(mult(9, 2, lambda), 0) << lambda;
    EXPECT_EQ(mult(9, 2, -2), 2);
    EXPECT_EQ(mult(9, 2, 4), 1);
}

TEST(IntegerEigs, NonCandidatesAndCompleteGraphs)
{
    EXPECT_THROW(integer_multiplicity(CircuitPower(12, 4), 2), std::domain_error);
    EXPECT_THROW(integer_multiplicity(CircuitPower(12, 4), -4), std::domain_error);
    EXPECT_THROW(integer_spectrum(CircuitPower(7, 3)), CompleteGraphError);
    EXPECT_TRUE(is_integer_candidate(CircuitPower(12, 4), 8));
    EXPECT_FALSE(is_integer_candidate(CircuitPower(12, 4), 2));
    EXPECT_FALSE(is_integer_candidate(CircuitPower(12, 4), -4));
}

TEST(IntegerEigs, SpectrumOrder)
{
    const auto all = integer_spectrum(CircuitPower(36, 14));
    std::vector<std::int64_t> eig;
    for (const auto& r : all) eig.push_back(r.eigenvalue);
    EXPECT_EQ(eig, (std::vector<std::int64_t>{28, 1, 0, -1, -2, -3}));
}

// Every formula against an independent dense eigensolver, and the
// Proposition: no other integer appears.
TEST(IntegerEigs, MatchDenseOracle)
{
    for (int n = 3; n <= 120; ++n) {
        for (int d = 1; 2 * d < n - 1; ++d) {
            const CircuitPower g(n, d);
            const auto values = oracle::eigen_values(oracle::distance_power(oracle::cycle(n), d));
            for (const auto& rep : integer_spectrum(g)) {
                ASSERT_EQ(oracle::count_near(values, static_cast<double>(rep.eigenvalue), 1e-7), rep.multiplicity)
                    << g.name() << " lambda=" << rep.eigenvalue << " case " << to_string(rep.case_tag);
            }
            for (double v : values) {
                const double k = std::round(v);
                if (std::abs(v - k) < 1e-7) {
                    ASSERT_TRUE(is_integer_candidate(g, static_cast<std::int64_t>(k))) << g.name() << " " << k;
                }
            }
        }
    }
}

TEST(IntegerEigs, EveryCaseIsReached)
{
    std::set<EigCase> seen;
    for (std::int64_t n = 3; n <= 60; ++n)
        for (std::int64_t d = 1; 2 * d < n - 1; ++d)
            for (const auto& r : integer_spectrum(CircuitPower(n, d))) seen.insert(r.case_tag);
    for (auto c : {EigCase::regular_degree, EigCase::minus_one, EigCase::nullity_ord_ge, EigCase::nullity_odd_d,
                   EigCase::nullity_even_n_even_d, EigCase::minus_two_ord_ge, EigCase::minus_two_even_d,
                   EigCase::minus_two_even_n_odd_d, EigCase::minus_two_cycle, EigCase::one_present,
                   EigCase::one_absent, EigCase::minus_three_present, EigCase::minus_three_absent}) {
        EXPECT_TRUE(seen.contains(c)) << to_string(c);
    }
}

TEST(IntegerEigs, NullityCasesAgreeWithHandFormula)
{
    for (std::int64_t n = 4; n <= 200; ++n) {
        for (std::int64_t d = 1; 2 * d < n - 1; ++d) {
            const auto g = std::gcd(n, d);
            const auto h = std::gcd(n, d + 1);
            std::int64_t expected;
            if (oracle::ord2(d + 1) >= oracle::ord2(n)) expected = g - 1;
            else if (d % 2 == 1) expected = g + h - 1;
            else expected = g + h - 2;
            ASSERT_EQ(mult(n, d, 0), expected) << n << "," << d;
            ASSERT_EQ(mult(n, d, -1), std::gcd(2 * d + 1, n) - 1);
        }
    }
}

TEST(Integrality, SoCriterion)
{
    EXPECT_TRUE(is_integral(CircuitPower(6, 1).as_circulant()).integral);
    EXPECT_TRUE(is_integral(CirculantGraph::complete(9)).integral);
    EXPECT_TRUE(is_integral(CircuitPower(4, 1).as_circulant()).integral);
    const auto c5 = is_integral(CircuitPower(5, 1).as_circulant());
    ASSERT_FALSE(c5.integral);
    ASSERT_TRUE(c5.violating_class.has_value());
    EXPECT_EQ(c5.violating_class->divisor, 1);
    EXPECT_EQ(c5.violating_class->members, (std::vector<std::int64_t>{1, 2, 3, 4}));
    EXPECT_EQ(c5.violating_class->missing, 2);
    // Union of full gcd classes {3, 9} and {6}.
    EXPECT_TRUE(is_integral(CirculantGraph(12, {3, 9, 6})).integral);
    EXPECT_TRUE(is_integral(CirculantGraph(12, {2, 10})).integral);
    const auto partial = is_integral(CirculantGraph(12, {1, 11}));
    ASSERT_FALSE(partial.integral);
    EXPECT_EQ(partial.violating_class->members, (std::vector<std::int64_t>{1, 5, 7, 11}));
    EXPECT_EQ(partial.violating_class->missing, 5);
}

TEST(Integrality, AgreesWithNumericSpectrum)
{
    for (std::int64_t n = 3; n <= 80; ++n) {
        for (std::int64_t d = 1; 2 * d < n - 1; ++d) {
            const CircuitPower g(n, d);
            bool numeric = true;
            for (const auto& e : circuit_power_spectrum(g)) numeric = numeric && std::abs(e.value - std::round(e.value)) < 1e-7;
            ASSERT_EQ(is_integral(g.as_circulant()).integral, numeric) << g.name();
        }
    }
}
