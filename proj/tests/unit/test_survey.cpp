#include "circpow/serialize.hpp"
#include "circpow/survey.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace circpow;

namespace {

ScanConfig config(IntRange n, std::vector<Check> checks, unsigned threads = 1)
{
    ScanConfig cfg;
    cfg.n_range = n;
    cfg.checks = std::move(checks);
    cfg.threads = threads;
    return cfg;
}

} // namespace

TEST(Survey, ParseRangeAndChecks)
{
    const auto r = parse_range("3..200");
    EXPECT_EQ(r.lo, 3);
    EXPECT_EQ(r.hi, 200);
    EXPECT_THROW(parse_range("3-200"), std::invalid_argument);
    EXPECT_THROW(parse_range("9..3"), std::invalid_argument);
    EXPECT_THROW(parse_range("a..b"), std::invalid_argument);
    EXPECT_EQ(parse_check("path-conjectures"), Check::path_conjectures);
    EXPECT_EQ(parse_check("odd_multiplicity"), Check::odd_multiplicity);
    EXPECT_FALSE(parse_check("nonsense").has_value());
    EXPECT_EQ(all_checks().size(), 5u);
}

TEST(Survey, ConfigValidation)
{
    auto cfg = config({3, 10}, {Check::theorems, Check::theorems});
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg.checks = {};
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg.checks = {Check::theorems};
    cfg.tol.integer = 0.0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg.tol.integer = 1e-7;
    EXPECT_NO_THROW(cfg.validate());
    cfg.n_range = {0, 10};
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Survey, GridOrderAndSkips)
{
    const auto cfg = config({3, 8}, {Check::theorems});
    const auto cells = scan_cells(cfg);
    ASSERT_FALSE(cells.empty());
    EXPECT_EQ(cells.front(), (std::pair<std::int64_t, std::int64_t>{3, 1}));
    for (std::size_t i = 1; i < cells.size(); ++i) EXPECT_LT(cells[i - 1], cells[i]);
    const auto records = run_scan(cfg);
    ASSERT_EQ(records.size(), cells.size());
    for (const auto& r : records) {
        const auto* c = r.find(check_key::theorems);
        ASSERT_NE(c, nullptr);
        const bool complete = 2 * r.d >= r.n - 1;
        EXPECT_EQ(c->outcome == Outcome::skip, complete) << r.n << "," << r.d;
    }
}

TEST(Survey, DeterministicAcrossThreadCounts)
{
    auto single = config({3, 30}, {Check::theorems, Check::odd_multiplicity, Check::mult_two, Check::integrality});
    auto multi = single;
    multi.threads = 4;
    const auto a = run_scan(single);
    const auto b = run_scan(multi);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(to_json(a[i]).dump(), to_json(b[i]).dump());
}

TEST(Survey, TheoremsHoldUpToSixty)
{
    const auto records = scan_integer_eig_theorems(config({3, 60}, {}));
    const auto summary = summarize(records);
    EXPECT_FALSE(summary.theorem_failure());
    EXPECT_EQ(summary.tallies.at(std::string(check_key::theorems)).fail, 0);
}

TEST(Survey, C36Power14CellPasses)
{
    ScanConfig cfg = config({36, 36}, all_checks());
    cfg.d_range = IntRange{14, 14};
    const auto records = run_scan(cfg);
    ASSERT_EQ(records.size(), 1u);
    const auto* t = records[0].find(check_key::theorems);
    ASSERT_NE(t, nullptr);
    EXPECT_EQ(t->outcome, Outcome::pass);
    EXPECT_EQ(records[0].find(check_key::odd_multiplicity)->outcome, Outcome::pass);
}

TEST(Survey, InjectedNumericDisagreementIsAWitnessedFailure)
{
    ScanConfig cfg = config({12, 12}, {Check::theorems});
    cfg.d_range = IntRange{4, 4};
    cfg.numeric = [](std::int64_t n, std::int64_t d) {
        auto v = jacobi_circuit_spectrum(n, d);
        // Turn one irrational eigenvalue into an extra copy of -3.
        for (auto& x : v) {
            if (std::abs(x - std::round(x)) > 1e-3) {
                x = -3.0;
                break;
            }
        }
        std::sort(v.begin(), v.end());
        return v;
    };
    const auto records = run_scan(cfg);
    const auto* t = records.at(0).find(check_key::theorems);
    ASSERT_NE(t, nullptr);
    EXPECT_EQ(t->outcome, Outcome::fail);
    EXPECT_FALSE(t->payload.empty());
    EXPECT_TRUE(summarize(records).theorem_failure());
}

TEST(Survey, OddMultiplicityHolds)
{
    const auto summary = summarize(scan_odd_multiplicity(config({3, 60}, {})));
    EXPECT_EQ(summary.tallies.at(std::string(check_key::odd_multiplicity)).fail, 0);
}

TEST(Survey, SharpWindowAndIntegralCells)
{
    const auto records = scan_mult_two(config({3, 40}, {}));
    const auto summary = summarize(records);
    EXPECT_EQ(summary.first_sharp_hit.at(1), 5);
    EXPECT_EQ(summary.first_sharp_hit.at(2), 7);
    for (const auto& r : records) {
        const auto* c = r.find(check_key::mult_two);
        if (c->outcome == Outcome::skip) continue;
        EXPECT_TRUE(c->payload.at("sharp_ok").get<bool>()) << r.n << "," << r.d;
    }
    const auto integral = summarize(scan_integrality(config({3, 12}, {})));
    const std::vector<std::pair<std::int64_t, std::int64_t>> expected{{4, 1}, {6, 1}, {6, 2}, {8, 3}, {10, 4}, {12, 5}};
    EXPECT_EQ(integral.integral_cells, expected);
}

TEST(Survey, PathScanReportsFindingsWithoutTheoremFailure)
{
    ScanConfig cfg = config({2, 16}, {});
    const auto records = scan_path_conjectures(cfg);
    const auto summary = summarize(records);
    EXPECT_FALSE(summary.theorem_failure());
    EXPECT_EQ(summary.tallies.at(std::string(check_key::path_partial)).fail, 0);
    EXPECT_EQ(summary.tallies.at(std::string(check_key::path_c3)).fail, 0);
    EXPECT_TRUE(is_conjecture_key(check_key::path_c2));
    EXPECT_FALSE(is_conjecture_key(check_key::path_partial));
    const auto json = to_json(summary);
    EXPECT_EQ(json.at("tallies").at("path_c3_simple_eigenvalues").at("finding"), "no counterexample in range");
}
