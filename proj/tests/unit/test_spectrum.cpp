#include "circpow/circulant.hpp"
#include "circpow/spectrum.hpp"

#include "../oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace circpow;

namespace {

std::vector<double> values_of(const Spectrum& s)
{
    std::vector<double> out;
    for (const auto& e : s) out.push_back(e.value);
    return out;
}

} // namespace

TEST(Spectrum, SixCycle)
{
    const auto s = circuit_power_spectrum(CircuitPower(6, 1));
    const std::vector<double> expected{2, 1, -1, -2, -1, 1};
    ASSERT_EQ(s.size(), 6u);
    for (std::size_t r = 0; r < 6; ++r) {
        EXPECT_EQ(s[r].r, static_cast<std::int64_t>(r));
        EXPECT_NEAR(s[r].value, expected[r], 1e-12);
    }
}

TEST(Spectrum, CompletePowerIsCompleteGraph)
{
    const auto s = circuit_power_spectrum(CircuitPower(4, 2));
    EXPECT_EQ(values_of(s), (std::vector<double>{3, -1, -1, -1}));
    const auto k7 = group_spectrum(circuit_power_spectrum(CircuitPower(7, 3)));
    ASSERT_EQ(k7.groups.size(), 2u);
    EXPECT_EQ(k7.groups[0].value, -1.0);
    EXPECT_EQ(k7.groups[0].multiplicity, 6);
    EXPECT_EQ(k7.groups[1].value, 6.0);
}

TEST(Spectrum, FiveCycleFirstEigenvalue)
{
    const auto s = circuit_power_spectrum(CircuitPower(5, 1));
    EXPECT_NEAR(s[1].value, 2.0 * std::cos(2.0 * std::numbers::pi / 5.0), 1e-12);
    EXPECT_NEAR(s[1].value, (std::sqrt(5.0) - 1.0) / 2.0, 1e-12);
}

TEST(Spectrum, ClosedFormMatchesCosineSumAndDft)
{
    for (std::int64_t n = 3; n <= 300; ++n) {
        for (std::int64_t d = 1; 2 * d < n - 1; ++d) {
            const CircuitPower g(n, d);
            const auto closed = circuit_power_spectrum(g);
            const auto cosine = circulant_spectrum(g.as_circulant());
            ASSERT_EQ(closed.size(), cosine.size());
            for (std::size_t r = 0; r < closed.size(); ++r)
                ASSERT_NEAR(closed[r].value, cosine[r].value, 1e-9) << g.name() << " r=" << r;
            if (n <= 80) {
                const auto dft = oracle::dft_spectrum(oracle::circuit_row(static_cast<int>(n), static_cast<int>(d)));
                for (std::size_t r = 0; r < closed.size(); ++r) ASSERT_NEAR(closed[r].value, dft[r], 1e-9);
            }
        }
    }
}

TEST(Spectrum, TraceEnergyAndSymmetry)
{
    for (std::int64_t n = 3; n <= 120; ++n) {
        for (std::int64_t d = 1; 2 * d < n - 1; ++d) {
            const auto s = circuit_power_spectrum(CircuitPower(n, d));
            double trace = 0.0;
            double energy = 0.0;
            for (const auto& e : s) {
                trace += e.value;
                energy += e.value * e.value;
            }
            ASSERT_NEAR(trace, 0.0, 1e-8);
            ASSERT_NEAR(energy, static_cast<double>(n * 2 * d), 1e-7);
            EXPECT_EQ(s[0].value, static_cast<double>(2 * d));
            for (std::int64_t r = 1; r < n; ++r) ASSERT_EQ(s[r].value, s[n - r].value);
        }
    }
}

TEST(Spectrum, RandomCirculantsMatchDft)
{
    std::mt19937_64 rng(20260101);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 60)(rng);
        std::vector<std::int64_t> jumps;
        std::vector<int> row(n, 0);
        for (int j = 1; j <= n / 2; ++j) {
            if (rng() % 2) {
                jumps.push_back(j);
                jumps.push_back(n - j);
                row[j] = row[n - j] = 1;
            }
        }
        if (jumps.empty()) continue;
        const auto s = circulant_spectrum(CirculantGraph(n, jumps));
        const auto dft = oracle::dft_spectrum(row);
        for (int r = 0; r < n; ++r) ASSERT_NEAR(s[r].value, dft[r], 1e-9);
    }
}

TEST(Grouping, SixCycle)
{
    const auto g = group_spectrum(circuit_power_spectrum(CircuitPower(6, 1)));
    ASSERT_EQ(g.groups.size(), 4u);
    const std::vector<std::pair<double, std::int64_t>> expected{{-2, 1}, {-1, 2}, {1, 2}, {2, 1}};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(g.groups[i].value, expected[i].first, 1e-12);
        EXPECT_EQ(g.groups[i].multiplicity, expected[i].second);
    }
    EXPECT_EQ(g.groups[1].indices, (std::vector<std::int64_t>{2, 4}));
    EXPECT_FALSE(g.ill_conditioned);
}

TEST(Grouping, KnownMultiplicities)
{
    const auto c36 = group_spectrum(circuit_power_spectrum(CircuitPower(36, 14)));
    EXPECT_EQ(c36.multiplicity_near(-2.0, 1e-9), 4);
    const auto c12 = group_spectrum(circuit_power_spectrum(CircuitPower(12, 4)));
    EXPECT_EQ(c12.multiplicity_near(-3.0, 1e-9), 2);
}

TEST(Grouping, RejectsNonPositiveTolerance)
{
    const auto s = circuit_power_spectrum(CircuitPower(6, 1));
    EXPECT_THROW(group_spectrum(s, 0.0), std::domain_error);
    const std::vector<double> v{1.0, 2.0};
    EXPECT_THROW(group_values(v, -1.0), std::domain_error);
}

TEST(Grouping, FlagsCloseGroups)
{
    const std::vector<double> v{0.0, 5e-9, 1.0};
    const auto g = group_values(v, 1e-9);
    EXPECT_EQ(g.groups.size(), 3u);
    EXPECT_TRUE(g.ill_conditioned);
    EXPECT_FALSE(g.warnings.empty());
}

TEST(Dirichlet, EndpointsMidpointAndZeros)
{
    for (std::int64_t d = 1; d <= 50; ++d) {
        const DirichletKernel f(d);
        EXPECT_EQ(f(0.0), static_cast<double>(2 * d + 1));
        EXPECT_EQ(f(2.0 * std::numbers::pi), static_cast<double>(2 * d + 1));
        EXPECT_NEAR(std::abs(f(std::numbers::pi)), 1.0, 1e-12);
        EXPECT_NEAR(f(f.q()), 0.0, 1e-12);
        // k q carries a rounding error that f amplifies by up to 2d + 1.
        for (std::int64_t k = 2; k <= 2 * d; ++k) EXPECT_NEAR(f(static_cast<double>(k) * f.q()), 0.0, 1e-10);
    }
    const DirichletKernel f3(3);
    EXPECT_NEAR(f_d(f3, 1.0), 1.0 + 2.0 * (std::cos(1.0) + std::cos(2.0) + std::cos(3.0)), 1e-12);
    EXPECT_THROW(f3(-0.1), std::domain_error);
    EXPECT_THROW(f3(7.0), std::domain_error);
    EXPECT_THROW(DirichletKernel(0), std::domain_error);
}

TEST(Dirichlet, UpperBoundDominates)
{
    for (std::int64_t d = 1; d <= 20; ++d) {
        const DirichletKernel f(d);
        for (int i = 1; i < 1000; ++i) {
            const double phi = 2.0 * std::numbers::pi * i / 1000.0;
            ASSERT_LE(std::abs(f(phi)), f.upper_bound(phi) + 1e-12);
        }
    }
}

TEST(MultTwoBound, Values)
{
    const auto b1 = mult_two_bound(1);
    EXPECT_NEAR(b1.sharp, 1.0 / std::sin(2.0 * std::numbers::pi / 3.0) - 1.0, 1e-15);
    EXPECT_NEAR(b1.sharp, 0.1547, 1e-4);
    EXPECT_NEAR(b1.relaxed, -0.6817, 1e-4);
    for (std::int64_t d = 1; d <= 100; ++d) {
        const auto b = mult_two_bound(d);
        EXPECT_GT(b.sharp, b.relaxed) << d;
    }
}
