#pragma once

#include "json.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace circpow {

enum class Check {
    theorems,         // integer-eigenvalue multiplicities vs numeric counts
    odd_multiplicity, // odd multiplicities only at 2d, 0, -2
    mult_two,         // multiplicity two above d/pi - 1 (and above u(2q) - 1)
    integrality,      // So's criterion vs numeric integrality
    path_conjectures, // path-power conjectures and the n/2 < d < n-1 result
};

std::string_view to_string(Check c);
std::optional<Check> parse_check(std::string_view name);
const std::vector<Check>& all_checks();

/// Keys used inside ScanRecord::checks. The path check contributes four.
namespace check_key {
inline constexpr std::string_view theorems = "theorems";
inline constexpr std::string_view odd_multiplicity = "odd_multiplicity";
inline constexpr std::string_view mult_two = "mult_two";
inline constexpr std::string_view integrality = "integrality";
inline constexpr std::string_view path_c1 = "path_c1_integer_eigenvalues";
inline constexpr std::string_view path_c2 = "path_c2_eigenvalue_one";
inline constexpr std::string_view path_c3 = "path_c3_simple_eigenvalues";
inline constexpr std::string_view path_partial = "path_partial_mult_two";
} // namespace check_key

/// Conjecture findings never change the exit status; everything else does.
bool is_conjecture_key(std::string_view key);

enum class Outcome { pass, fail, skip };
std::string_view to_string(Outcome o);

struct CheckResult {
    Outcome outcome = Outcome::skip;
    nlohmann::json payload = nlohmann::json::object();
};

struct ScanRecord {
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::map<std::string, CheckResult, std::less<>> checks;
    std::chrono::nanoseconds elapsed{0};

    const CheckResult* find(std::string_view key) const;
};

struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    bool contains(std::int64_t x) const noexcept { return lo <= x && x <= hi; }
};

/// Parses "a..b" or a single integer "a".
IntRange parse_range(std::string_view text);

struct ScanTolerances {
    double integer = 1e-7;      // numeric value vs exact integer
    double group = 1e-6;        // merging numeric eigenvalues into multiplicities
    double path_integer = 1e-6; // integer candidates of path powers (then confirmed exactly)
};

/// Sorted eigenvalues of C_n^(d) from an independent numeric source.
using NumericSpectrumFn = std::function<std::vector<double>(std::int64_t n, std::int64_t d)>;

/// Dense Jacobi (values only, reflection-split) on the adjacency of C_n^(d).
std::vector<double> jacobi_circuit_spectrum(std::int64_t n, std::int64_t d);

struct ScanConfig {
    IntRange n_range{3, 60};
    /// Defaults to 1..n-1 per row.
    std::optional<IntRange> d_range;
    std::vector<Check> checks;
    ScanTolerances tol;
    unsigned threads = 1;
    std::int64_t path_n_cap = 64;
    NumericSpectrumFn numeric; // empty: jacobi_circuit_spectrum

    /// Throws std::invalid_argument on empty ranges, duplicate checks or
    /// non-positive tolerances.
    void validate() const;
};

/// Grid cells in output order: n ascending, then d ascending.
std::vector<std::pair<std::int64_t, std::int64_t>> scan_cells(const ScanConfig& cfg);

/// Runs every configured check on every cell. Records come back in grid
/// order regardless of the thread count.
std::vector<ScanRecord> run_scan(const ScanConfig& cfg);

std::vector<ScanRecord> scan_integer_eig_theorems(ScanConfig cfg);
std::vector<ScanRecord> scan_odd_multiplicity(ScanConfig cfg);
std::vector<ScanRecord> scan_mult_two(ScanConfig cfg);
std::vector<ScanRecord> scan_integrality(ScanConfig cfg);
std::vector<ScanRecord> scan_path_conjectures(ScanConfig cfg);

struct CheckTally {
    std::int64_t pass = 0;
    std::int64_t fail = 0;
    std::int64_t skip = 0;
    /// (n, d) of failing cells, at most kMaxWitnesses of them.
    std::vector<std::pair<std::int64_t, std::int64_t>> failures;
};

struct ScanSummary {
    static constexpr std::size_t kMaxWitnesses = 50;

    std::map<std::string, CheckTally, std::less<>> tallies;
    /// Non-complete cells that are integral by So's criterion.
    std::vector<std::pair<std::int64_t, std::int64_t>> integral_cells;
    /// Smallest n per d with an eigenvalue inside the window, for each window.
    std::map<std::int64_t, std::int64_t> first_relaxed_hit;
    std::map<std::int64_t, std::int64_t> first_sharp_hit;
    /// Integer eigenvalues seen in path powers, with the first (n, d).
    std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> path_integer_eigenvalues;

    /// Any failure outside the conjecture keys.
    bool theorem_failure() const;
};

ScanSummary summarize(const std::vector<ScanRecord>& records);

} // namespace circpow
