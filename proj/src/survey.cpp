#include "circpow/survey.hpp"

#include "circpow/circulant.hpp"
#include "circpow/exact.hpp"
#include "circpow/integer_eigs.hpp"
#include "circpow/oracle.hpp"
#include "circpow/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

namespace circpow {

namespace {

using nlohmann::json;

bool near_integer(double value, double tol, std::int64_t& nearest)
{
    const double rounded = std::round(value);
    nearest = static_cast<std::int64_t>(rounded);
    return std::abs(value - rounded) <= tol;
}

CheckResult check_theorems(const CircuitPower& g, const std::vector<double>& values, const ScanTolerances& tol)
{
    CheckResult result{Outcome::pass, json::object()};
    json mults = json::array();
    for (const auto& report : integer_spectrum(g)) {
        const auto numeric = numeric_multiplicity(values, static_cast<double>(report.eigenvalue), tol.integer);
        const bool ok = numeric.count == report.multiplicity;
        if (!ok) result.outcome = Outcome::fail;
        mults.push_back({{"eigenvalue", report.eigenvalue},
                         {"predicted", report.multiplicity},
                         {"numeric", numeric.count},
                         {"case", to_string(report.case_tag)},
                         {"ok", ok}});
    }
    result.payload["multiplicities"] = std::move(mults);

    // Every near-integer value must be one of the six candidates.
    json stray = json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::int64_t k = 0;
        if (near_integer(values[i], tol.integer, k) && !is_integer_candidate(g, k)) {
            stray.push_back({{"position", i}, {"value", values[i]}, {"integer", k}});
        }
    }
    if (!stray.empty()) result.outcome = Outcome::fail;
    result.payload["non_candidate_integers"] = std::move(stray);
    return result;
}

CheckResult check_odd_multiplicity(const CircuitPower& g, const std::vector<double>& values,
                                   const ScanTolerances& tol)
{
    CheckResult result{Outcome::pass, json::object()};
    const auto groups = group_values(values, tol.group);
    const double allowed[] = {static_cast<double>(2 * g.d()), 0.0, -2.0};
    json odd = json::array();
    json offending = json::array();
    for (const auto& group : groups.groups) {
        if (group.multiplicity % 2 == 0) continue;
        odd.push_back({{"value", group.value}, {"multiplicity", group.multiplicity}});
        const bool ok = std::any_of(std::begin(allowed), std::end(allowed),
                                    [&](double a) { return std::abs(group.value - a) <= tol.group; });
        if (!ok) offending.push_back({{"value", group.value}, {"multiplicity", group.multiplicity}});
    }
    if (!offending.empty()) result.outcome = Outcome::fail;
    result.payload["odd_groups"] = std::move(odd);
    result.payload["offending"] = std::move(offending);
    return result;
}

json window_check(const GroupedSpectrum& groups, double lo, double hi, bool& ok)
{
    json hits = json::array();
    json violations = json::array();
    for (const auto& group : groups.groups) {
        if (group.value > lo && group.value < hi) {
            hits.push_back({{"value", group.value}, {"multiplicity", group.multiplicity}});
            if (group.multiplicity != 2) {
                violations.push_back({{"value", group.value}, {"multiplicity", group.multiplicity}});
            }
        }
    }
    ok = violations.empty();
    return {{"window", {lo, hi}}, {"hits", std::move(hits)}, {"violations", std::move(violations)}};
}

CheckResult check_mult_two(const CircuitPower& g, const std::vector<double>& values, const ScanTolerances& tol)
{
    const auto groups = group_values(values, tol.group);
    const auto bound = mult_two_bound(g.d());
    const double top = static_cast<double>(2 * g.d()) - tol.group;
    bool relaxed_ok = true;
    bool sharp_ok = true;
    CheckResult result{Outcome::pass, json::object()};
    result.payload["relaxed"] = window_check(groups, bound.relaxed, top, relaxed_ok);
    result.payload["sharp"] = window_check(groups, bound.sharp, top, sharp_ok);
    result.payload["relaxed_ok"] = relaxed_ok;
    result.payload["sharp_ok"] = sharp_ok;
    if (!relaxed_ok || !sharp_ok) result.outcome = Outcome::fail;
    return result;
}

CheckResult check_integrality(const CircuitPower& g, const std::vector<double>& values, const ScanTolerances& tol)
{
    const auto verdict = is_integral(g.as_circulant());
    bool numeric = true;
    for (double v : values) {
        std::int64_t k = 0;
        if (!near_integer(v, tol.integer, k)) {
            numeric = false;
            break;
        }
    }
    const bool expected = g.n() == 6 && g.d() == 1;
    CheckResult result;
    result.outcome = (verdict.integral == numeric && verdict.integral == expected) ? Outcome::pass : Outcome::fail;
    result.payload["so_integral"] = verdict.integral;
    result.payload["numeric_integral"] = numeric;
    result.payload["agree"] = verdict.integral == numeric;
    result.payload["expected_integral"] = expected;
    if (verdict.violating_class) {
        result.payload["witness"] = {{"gcd", verdict.violating_class->divisor},
                                     {"class", verdict.violating_class->members},
                                     {"missing", verdict.violating_class->missing}};
    }
    return result;
}

void check_path(std::int64_t n, std::int64_t d, const ScanConfig& cfg, ScanRecord& record)
{
    const auto skip_all = [&](const char* reason) {
        for (auto key : {check_key::path_c1, check_key::path_c2, check_key::path_c3, check_key::path_partial}) {
            record.checks[std::string(key)] = {Outcome::skip, {{"reason", reason}}};
        }
    };
    if (n < 2 || d > n - 1) return skip_all("outside 1 <= d <= n-1");
    if (n > cfg.path_n_cap) return skip_all("n above path cap");

    const PathPower p(n, d);
    const auto a = adjacency(p);
    JacobiOptions opts;
    opts.compute_vectors = false;
    opts.involution = reversal_involution(static_cast<std::size_t>(n));
    const auto values = symmetric_eigen(a, opts).values;
    const auto groups = group_values(values, cfg.tol.group);

    // C1: integer eigenvalues, each confirmed by exact integer nullity.
    json integers = json::array();
    std::int64_t exact_one = 0;
    for (const auto& group : groups.groups) {
        std::int64_t k = 0;
        if (!near_integer(group.value, cfg.tol.path_integer, k)) continue;
        const auto exact = exact_eigen_multiplicity(a, k);
        if (exact == 0) continue;
        integers.push_back({{"eigenvalue", k}, {"multiplicity", exact}, {"numeric_multiplicity", group.multiplicity}});
        if (k == 1) exact_one = exact;
    }
    record.checks[std::string(check_key::path_c1)] = {Outcome::pass, {{"integer_eigenvalues", integers}}};

    // C2: eigenvalue 1 only for K_2.
    const bool is_k2 = n == 2;
    CheckResult c2{Outcome::pass, {{"eigenvalue_one_multiplicity", exact_one}, {"allowed_exception", is_k2}}};
    if (exact_one > 0 && !is_k2) c2.outcome = Outcome::fail;
    record.checks[std::string(check_key::path_c2)] = std::move(c2);

    // C3: eigenvalues outside {-2, -1, 0} are simple.
    json multiple = json::array();
    for (const auto& group : groups.groups) {
        const bool exempt = std::abs(group.value + 2.0) <= cfg.tol.group || std::abs(group.value + 1.0) <= cfg.tol.group
                            || std::abs(group.value) <= cfg.tol.group;
        if (!exempt && group.multiplicity > 1) {
            multiple.push_back({{"value", group.value}, {"multiplicity", group.multiplicity}});
        }
    }
    record.checks[std::string(check_key::path_c3)] = {multiple.empty() ? Outcome::pass : Outcome::fail,
                                                      {{"multiple_eigenvalues", multiple}}};

    // For n/2 < d < n-1 every multiple eigenvalue other than -1 is double.
    if (2 * d > n && d < n - 1) {
        json bad = json::array();
        for (const auto& group : groups.groups) {
            if (group.multiplicity > 1 && std::abs(group.value + 1.0) > cfg.tol.group && group.multiplicity != 2) {
                bad.push_back({{"value", group.value}, {"multiplicity", group.multiplicity}});
            }
        }
        record.checks[std::string(check_key::path_partial)] = {bad.empty() ? Outcome::pass : Outcome::fail,
                                                               {{"violations", bad}}};
    } else {
        record.checks[std::string(check_key::path_partial)] = {Outcome::skip, {{"reason", "d outside (n/2, n-1)"}}};
    }
}

ScanRecord evaluate_cell(std::int64_t n, std::int64_t d, const ScanConfig& cfg)
{
    const auto start = std::chrono::steady_clock::now();
    ScanRecord record;
    record.n = n;
    record.d = d;

    std::vector<Check> circuit_checks;
    bool path = false;
    for (auto c : cfg.checks) {
        if (c == Check::path_conjectures) {
            path = true;
        } else {
            circuit_checks.push_back(c);
        }
    }

    if (!circuit_checks.empty()) {
        const bool valid = n >= 3 && d >= 1;
        const bool complete = valid && 2 * d >= n - 1;
        if (!valid || complete) {
            const char* reason = valid ? "complete graph" : "not a circuit power";
            for (auto c : circuit_checks) record.checks[std::string(to_string(c))] = {Outcome::skip, {{"reason", reason}}};
        } else {
            const CircuitPower g(n, d);
            const auto values = cfg.numeric ? cfg.numeric(n, d) : jacobi_circuit_spectrum(n, d);
            for (auto c : circuit_checks) {
                CheckResult result;
                switch (c) {
                case Check::theorems: result = check_theorems(g, values, cfg.tol); break;
                case Check::odd_multiplicity: result = check_odd_multiplicity(g, values, cfg.tol); break;
                case Check::mult_two: result = check_mult_two(g, values, cfg.tol); break;
                case Check::integrality: result = check_integrality(g, values, cfg.tol); break;
                case Check::path_conjectures: break;
                }
                record.checks[std::string(to_string(c))] = std::move(result);
            }
        }
    }
    if (path) check_path(n, d, cfg, record);

    record.elapsed = std::chrono::steady_clock::now() - start;
    return record;
}

std::vector<ScanRecord> scan_with(ScanConfig cfg, Check only)
{
    cfg.checks = {only};
    return run_scan(cfg);
}

} // namespace

std::string_view to_string(Check c)
{
    switch (c) {
    case Check::theorems: return check_key::theorems;
    case Check::odd_multiplicity: return check_key::odd_multiplicity;
    case Check::mult_two: return check_key::mult_two;
    case Check::integrality: return check_key::integrality;
    case Check::path_conjectures: return "path_conjectures";
    }
    return "unknown";
}

std::optional<Check> parse_check(std::string_view name)
{
    for (auto c : all_checks()) {
        std::string canonical(to_string(c));
        std::string dashed = canonical;
        std::replace(dashed.begin(), dashed.end(), '_', '-');
        if (name == canonical || name == dashed) return c;
    }
    return std::nullopt;
}

const std::vector<Check>& all_checks()
{
    static const std::vector<Check> checks = {Check::theorems, Check::odd_multiplicity, Check::mult_two,
                                              Check::integrality, Check::path_conjectures};
    return checks;
}

bool is_conjecture_key(std::string_view key)
{
    return key == check_key::path_c1 || key == check_key::path_c2 || key == check_key::path_c3;
}

std::string_view to_string(Outcome o)
{
    switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::skip: return "skip";
    }
    return "unknown";
}

const CheckResult* ScanRecord::find(std::string_view key) const
{
    const auto it = checks.find(key);
    return it == checks.end() ? nullptr : &it->second;
}

IntRange parse_range(std::string_view text)
{
    auto parse_int = [&](std::string_view s) {
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
            throw std::invalid_argument("bad integer in range '" + std::string(text) + "'");
        }
        return value;
    };
    const auto dots = text.find("..");
    IntRange range;
    if (dots == std::string_view::npos) {
        range.lo = range.hi = parse_int(text);
    } else {
        range.lo = parse_int(text.substr(0, dots));
        range.hi = parse_int(text.substr(dots + 2));
    }
    if (range.lo > range.hi) throw std::invalid_argument("empty range '" + std::string(text) + "'");
    return range;
}

std::vector<double> jacobi_circuit_spectrum(std::int64_t n, std::int64_t d)
{
    JacobiOptions opts;
    opts.compute_vectors = false;
    opts.involution = reflection_involution(static_cast<std::size_t>(n));
    return symmetric_eigen(adjacency(CircuitPower(n, d)), opts).values;
}

void ScanConfig::validate() const
{
    if (n_range.lo > n_range.hi || n_range.lo < 1) throw std::invalid_argument("n range must be non-empty and >= 1");
    if (d_range && (d_range->lo > d_range->hi || d_range->lo < 1)) {
        throw std::invalid_argument("d range must be non-empty and >= 1");
    }
    if (checks.empty()) throw std::invalid_argument("no checks selected");
    std::set<Check> seen(checks.begin(), checks.end());
    if (seen.size() != checks.size()) throw std::invalid_argument("duplicate check");
    if (!(tol.integer > 0.0 && tol.group > 0.0 && tol.path_integer > 0.0)) {
        throw std::invalid_argument("tolerances must be positive");
    }
    if (threads == 0) throw std::invalid_argument("thread count must be positive");
}

std::vector<std::pair<std::int64_t, std::int64_t>> scan_cells(const ScanConfig& cfg)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> cells;
    for (auto n = cfg.n_range.lo; n <= cfg.n_range.hi; ++n) {
        const auto lo = cfg.d_range ? cfg.d_range->lo : 1;
        const auto hi = cfg.d_range ? cfg.d_range->hi : std::max<std::int64_t>(n - 1, 1);
        for (auto d = lo; d <= hi; ++d) cells.emplace_back(n, d);
    }
    return cells;
}

std::vector<ScanRecord> run_scan(const ScanConfig& cfg)
{
    cfg.validate();
    const auto cells = scan_cells(cfg);
    std::vector<ScanRecord> records(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (auto i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
            records[i] = evaluate_cell(cells[i].first, cells[i].second, cfg);
        }
    };
    const auto width = std::min<std::size_t>(cfg.threads, std::max<std::size_t>(cells.size(), 1));
    if (width <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(width);
        for (std::size_t t = 0; t < width; ++t) pool.emplace_back(worker);
    }
    return records;
}

std::vector<ScanRecord> scan_integer_eig_theorems(ScanConfig cfg) { return scan_with(std::move(cfg), Check::theorems); }
std::vector<ScanRecord> scan_odd_multiplicity(ScanConfig cfg) { return scan_with(std::move(cfg), Check::odd_multiplicity); }
std::vector<ScanRecord> scan_mult_two(ScanConfig cfg) { return scan_with(std::move(cfg), Check::mult_two); }
std::vector<ScanRecord> scan_integrality(ScanConfig cfg) { return scan_with(std::move(cfg), Check::integrality); }
std::vector<ScanRecord> scan_path_conjectures(ScanConfig cfg) { return scan_with(std::move(cfg), Check::path_conjectures); }

bool ScanSummary::theorem_failure() const
{
    for (const auto& [key, tally] : tallies) {
        if (!is_conjecture_key(key) && tally.fail > 0) return true;
    }
    return false;
}

ScanSummary summarize(const std::vector<ScanRecord>& records)
{
    ScanSummary summary;
    for (const auto& record : records) {
        for (const auto& [key, result] : record.checks) {
            auto& tally = summary.tallies[key];
            switch (result.outcome) {
            case Outcome::pass: ++tally.pass; break;
            case Outcome::skip: ++tally.skip; break;
            case Outcome::fail:
                ++tally.fail;
                if (tally.failures.size() < ScanSummary::kMaxWitnesses) tally.failures.emplace_back(record.n, record.d);
                break;
            }
            if (result.outcome == Outcome::skip) continue;
            if (key == check_key::integrality && result.payload.value("so_integral", false)) {
                summary.integral_cells.emplace_back(record.n, record.d);
            }
            if (key == check_key::mult_two) {
                if (!result.payload["relaxed"]["hits"].empty()) summary.first_relaxed_hit.try_emplace(record.d, record.n);
                if (!result.payload["sharp"]["hits"].empty()) summary.first_sharp_hit.try_emplace(record.d, record.n);
            }
            if (key == check_key::path_c1) {
                for (const auto& e : result.payload["integer_eigenvalues"]) {
                    summary.path_integer_eigenvalues.try_emplace(e["eigenvalue"].get<std::int64_t>(), record.n,
                                                                 record.d);
                }
            }
        }
    }
    return summary;
}

} // namespace circpow
