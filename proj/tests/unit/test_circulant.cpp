#include "circpow/circulant.hpp"

#include "../oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace circpow;

TEST(CircuitPower, JumpSetExamples)
{
    EXPECT_EQ(jump_set(CircuitPower(6, 1)), (std::vector<std::int64_t>{1, 5}));
    EXPECT_EQ(jump_set(CircuitPower(10, 3)), (std::vector<std::int64_t>{1, 2, 3, 7, 8, 9}));
    EXPECT_EQ(jump_set(CircuitPower(7, 3)), (std::vector<std::int64_t>{1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(jump_set(CircuitPower(36, 14)).size(), 28u);
}

TEST(CircuitPower, Completeness)
{
    EXPECT_FALSE(CircuitPower(6, 2).complete());
    EXPECT_TRUE(CircuitPower(5, 2).complete());
    EXPECT_TRUE(CircuitPower(6, 3).complete());
    EXPECT_TRUE(CircuitPower(3, 1).complete());
    EXPECT_TRUE(CircuitPower(10, 100).complete());
    EXPECT_THROW(CircuitPower(7, 3).require_non_complete(), CompleteGraphError);
    EXPECT_NO_THROW(CircuitPower(8, 3).require_non_complete());
}

TEST(CircuitPower, RejectsBadParameters)
{
    EXPECT_THROW(CircuitPower(2, 1), std::domain_error);
    EXPECT_THROW(CircuitPower(5, 0), std::domain_error);
    EXPECT_THROW(CircuitPower(-4, 1), std::domain_error);
    EXPECT_THROW(CircuitPower(kMaxParameter + 1, 1), std::domain_error);
    EXPECT_NO_THROW(CircuitPower(kMaxParameter, 1));
}

TEST(CircuitPower, Name)
{
    EXPECT_EQ(CircuitPower(36, 14).name(), "C_36^(14)");
}

TEST(CirculantGraph, Validation)
{
    EXPECT_THROW(CirculantGraph(6, {1}), std::domain_error);
    EXPECT_THROW(CirculantGraph(6, {0, 1, 5}), std::domain_error);
    EXPECT_THROW(CirculantGraph(6, {1, 6}), std::domain_error);
    const CirculantGraph g(8, {7, 1, 4, 1});
    EXPECT_EQ(g.jumps(), (std::vector<std::int64_t>{1, 4, 7}));
    EXPECT_EQ(g.degree(), 3);
    EXPECT_TRUE(g.has_jump(4));
    EXPECT_FALSE(g.has_jump(2));
    EXPECT_EQ(CirculantGraph::complete(5).degree(), 4);
}

TEST(Adjacency, MatchesBreadthFirstDistancePower)
{
    for (int n = 3; n <= 64; ++n) {
        const auto base = oracle::cycle(n);
        for (int d = 1; d <= n / 2 + 1; ++d) {
            const auto expected = oracle::distance_power(base, d);
            const auto a = adjacency(CircuitPower(n, d));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) ASSERT_EQ(a(i, j), expected[i][j]) << "n=" << n << " d=" << d;
        }
    }
}

TEST(Adjacency, PathPowerMatchesBreadthFirst)
{
    for (int n = 1; n <= 30; ++n) {
        const auto base = oracle::path(n);
        for (int d = 1; d <= n; ++d) {
            const auto expected = oracle::distance_power(base, d);
            const auto a = adjacency(PathPower(n, d));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) ASSERT_EQ(a(i, j), expected[i][j]) << "n=" << n << " d=" << d;
        }
    }
}

TEST(Adjacency, RotationInvariantAndRegular)
{
    for (int n = 3; n <= 40; ++n) {
        for (int d = 1; 2 * d < n - 1; ++d) {
            const auto a = adjacency(CircuitPower(n, d));
            ASSERT_TRUE(a.is_symmetric());
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) ASSERT_EQ(a(i, j), a((i + 1) % n, (j + 1) % n));
            for (auto deg : a.degrees()) ASSERT_EQ(deg, 2 * d);
        }
    }
}

TEST(Adjacency, ExampleRowSums)
{
    const auto a = adjacency(CircuitPower(36, 14));
    for (std::int64_t i = 0; i < 36; ++i) {
        const auto row = a.row(i);
        EXPECT_EQ(std::accumulate(row.begin(), row.end(), 0), 28);
    }
}

TEST(Adjacency, ConnectRejectsLoops)
{
    AdjacencyMatrix a(4);
    EXPECT_THROW(a.connect(2, 2), std::domain_error);
    a.connect(0, 3);
    EXPECT_EQ(a(3, 0), 1);
    EXPECT_TRUE(a.is_symmetric());
}
