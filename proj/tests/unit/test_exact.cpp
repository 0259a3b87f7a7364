#include "circpow/circulant.hpp"
#include "circpow/eigenbasis.hpp"
#include "circpow/exact.hpp"

#include "../oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace circpow;

TEST(Exact, VerifyEigenvector)
{
    const auto a = adjacency(CircuitPower(6, 1));
    const IntVector alt{1, -1, 1, -1, 1, -1};
    EXPECT_TRUE(verify_exact(a, alt, -2));
    EXPECT_FALSE(verify_exact(a, alt, 2));
    const IntVector ones(6, 1);
    EXPECT_TRUE(verify_exact(a, ones, 2));
    EXPECT_THROW(verify_exact(a, IntVector(5, 1), 2), std::invalid_argument);
}

TEST(Exact, RankMatchesRationalElimination)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = std::uniform_int_distribution<int>(1, 9)(rng);
        const int cols = std::uniform_int_distribution<int>(1, 9)(rng);
        const int span = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<IntVector> vs;
        for (int i = 0; i < rows; ++i) {
            IntVector v(cols);
            for (auto& x : v) x = std::uniform_int_distribution<int>(-span, span)(rng);
            vs.push_back(v);
        }
        // Force dependencies now and then.
        if (rows > 2 && trial % 3 == 0) {
            for (int j = 0; j < cols; ++j) vs[rows - 1][j] = vs[0][j] - 2 * vs[1][j];
        }
        ASSERT_EQ(exact_rank(vs), oracle::rational_rank(vs)) << "trial " << trial;
    }
}

TEST(Exact, PivotsAreEarliestIndependent)
{
    const std::vector<IntVector> vs{{0, 0, 0}, {1, 2, 3}, {2, 4, 6}, {0, 1, 0}, {1, 3, 3}, {0, 0, 1}};
    const auto s = independent_subset(vs);
    EXPECT_EQ(s.rank, 3);
    EXPECT_EQ(s.pivots, (std::vector<std::size_t>{1, 3, 5}));
}

TEST(Exact, LargeEntriesFallBackToBigIntegers)
{
    // Bareiss determinants grow past int64 for a dense 24 x 24 matrix of
    // entries near 2^30; the rank must still be exact.
    std::mt19937_64 rng(11);
    std::vector<IntVector> vs;
    for (int i = 0; i < 24; ++i) {
        IntVector v(24);
        for (auto& x : v) x = std::uniform_int_distribution<int>(-(1 << 30), 1 << 30)(rng);
        vs.push_back(v);
    }
    vs.push_back(vs[3]);
    EXPECT_EQ(exact_rank(vs), 24);
}

TEST(Exact, CandidateRank)
{
    // Eigenvalue 0 of C_12^(2): g - 1 = 1 difference vector plus h = 3
    // alternating vectors, one of them dependent.
    const auto rep = basis_kernel(CircuitPower(12, 2));
    EXPECT_EQ(rep.candidates, 4);
    EXPECT_EQ(rep.rank, 3);
    EXPECT_TRUE(rep.reduced);
    std::vector<IntVector> vs;
    for (const auto& v : rep.vectors) vs.push_back(v.entries);
    EXPECT_EQ(exact_rank(vs), oracle::rational_rank(vs));
}

TEST(Exact, EigenMultiplicity)
{
    EXPECT_EQ(exact_eigen_multiplicity(adjacency(CircuitPower(36, 14)), -2), 4);
    EXPECT_EQ(exact_eigen_multiplicity(adjacency(PathPower(15, 6)), 0), 3);
    EXPECT_EQ(exact_eigen_multiplicity(adjacency(CircuitPower(9, 2)), 0), 0);
}

TEST(Exact, Dot)
{
    const IntVector a{1, -1, 0, 2};
    const IntVector b{3, 1, 7, -1};
    EXPECT_EQ(dot(a, b), 0);
    EXPECT_THROW(dot(a, IntVector{1}), std::invalid_argument);
}
