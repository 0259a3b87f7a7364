#include "circpow/eigenbasis.hpp"

#include "circpow/integer_eigs.hpp"

#include <algorithm>
#include <string>

namespace circpow {

namespace {

BasisVector make_vector(IntVector entries, std::int64_t lambda, BasisFamily family, Pattern pattern, std::int64_t k,
                        std::int64_t period)
{
    BasisVector v;
    v.entries = std::move(entries);
    v.eigenvalue = lambda;
    v.family = family;
    v.pattern = pattern;
    v.k = k;
    v.period = period;
    return v;
}

void append_difference_family(std::vector<BasisVector>& out, std::int64_t n, std::int64_t period, std::int64_t count,
                              std::int64_t lambda, BasisFamily family)
{
    for (std::int64_t k = 1; k <= count; ++k) {
        out.push_back(make_vector(difference_vector(n, period, k), lambda, family, Pattern::difference, k, period));
    }
}

void append_alternating_family(std::vector<BasisVector>& out, std::int64_t n, std::int64_t period,
                               std::int64_t count, std::int64_t lambda, BasisFamily family)
{
    for (std::int64_t k = 1; k <= count; ++k) {
        out.push_back(make_vector(alternating_vector(n, period, k), lambda, family, Pattern::alternating, k, period));
    }
}

// Verifies the candidates, keeps the earliest independent subset and fills
// the summary fields.
EigenbasisReport finish(const CircuitPower& g, std::int64_t lambda, std::int64_t predicted,
                        std::vector<BasisVector> candidates)
{
    EigenbasisReport report;
    report.eigenvalue = lambda;
    report.predicted_multiplicity = predicted;
    report.candidates = static_cast<std::int64_t>(candidates.size());
    if (candidates.empty()) {
        report.orthogonal = true;
        return report;
    }

    const auto a = adjacency(g);
    std::vector<IntVector> raw;
    raw.reserve(candidates.size());
    for (auto& v : candidates) {
        v.verified = verify_exact(a, v.entries, lambda);
        raw.push_back(v.entries);
    }
    const auto independent = independent_subset(raw);
    report.rank = independent.rank;
    report.reduced = independent.pivots.size() < candidates.size();
    for (auto idx : independent.pivots) report.vectors.push_back(std::move(candidates[idx]));
    report.orthogonal = orthogonality_check(report);
    return report;
}

} // namespace

std::string_view to_string(BasisFamily f)
{
    switch (f) {
    case BasisFamily::all_ones: return "all_ones";
    case BasisFamily::period6_a: return "period6_A";
    case BasisFamily::period6_b: return "period6_B";
    case BasisFamily::u_prime: return "u_prime";
    case BasisFamily::v_prime: return "v_prime";
    }
    return "unknown";
}

bool EigenbasisReport::all_verified() const
{
    return std::all_of(vectors.begin(), vectors.end(), [](const auto& v) { return v.verified; });
}

bool EigenbasisReport::simply_structured() const
{
    return std::all_of(vectors.begin(), vectors.end(), [](const auto& v) {
        return std::all_of(v.entries.begin(), v.entries.end(), [](int x) { return x >= -1 && x <= 1; });
    });
}

IntVector difference_vector(std::int64_t n, std::int64_t period, std::int64_t k)
{
    if (period < 1 || n % period != 0 || k < 1 || k > period) {
        throw std::domain_error("difference pattern needs period | n and 1 <= k <= period");
    }
    IntVector v(static_cast<std::size_t>(n), 0);
    for (std::int64_t base = 0; base < n; base += period) {
        v[static_cast<std::size_t>(base + k - 1)] += 1;
        v[static_cast<std::size_t>(base + period - 1)] -= 1;
    }
    return v;
}

IntVector alternating_vector(std::int64_t n, std::int64_t period, std::int64_t k)
{
    if (period < 1 || n % (2 * period) != 0 || k < 1 || k > period) {
        throw std::domain_error("alternating pattern needs 2 * period | n and 1 <= k <= period");
    }
    IntVector v(static_cast<std::size_t>(n), 0);
    int sign = 1;
    for (std::int64_t base = 0; base < n; base += period) {
        v[static_cast<std::size_t>(base + k - 1)] = sign;
        sign = -sign;
    }
    return v;
}

EigenbasisReport basis_all_ones(const CircuitPower& g)
{
    g.require_non_complete();
    const auto lambda = 2 * g.d();
    std::vector<BasisVector> candidates;
    candidates.push_back(make_vector(IntVector(static_cast<std::size_t>(g.n()), 1), lambda, BasisFamily::all_ones,
                                     Pattern::constant, 1, 1));
    return finish(g, lambda, 1, std::move(candidates));
}

EigenbasisReport basis_pm_one(const CircuitPower& g, std::int64_t lambda)
{
    g.require_non_complete();
    if (lambda != 1 && lambda != -3) throw std::domain_error("period-6 basis exists only for eigenvalues 1 and -3");
    const auto report = lambda == 1 ? mult_one(g) : mult_minus_three(g);
    if (report.multiplicity == 0) {
        throw EigenvalueAbsentError(std::to_string(lambda) + " is not an eigenvalue of " + g.name() + " ("
                                    + std::string(to_string(report.case_tag)) + ")");
    }
    static constexpr int kPatternA[6] = {1, 1, 0, -1, -1, 0};
    static constexpr int kPatternB[6] = {1, 0, -1, -1, 0, 1};
    IntVector a(static_cast<std::size_t>(g.n()));
    IntVector b(static_cast<std::size_t>(g.n()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = kPatternA[i % 6];
        b[i] = kPatternB[i % 6];
    }
    std::vector<BasisVector> candidates;
    candidates.push_back(make_vector(std::move(a), lambda, BasisFamily::period6_a, Pattern::constant, 1, 6));
    candidates.push_back(make_vector(std::move(b), lambda, BasisFamily::period6_b, Pattern::constant, 2, 6));
    return finish(g, lambda, report.multiplicity, std::move(candidates));
}

EigenbasisReport basis_kernel(const CircuitPower& g)
{
    const auto report = nullity(g);
    const auto n = g.n();
    const auto gg = report.params.g;
    const auto h = report.params.h;
    std::vector<BasisVector> candidates;
    append_difference_family(candidates, n, gg, gg - 1, 0, BasisFamily::u_prime);
    if (report.case_tag != EigCase::nullity_ord_ge) {
        // ord2(d+1) < ord2(n), equivalently 2h | n.
        append_alternating_family(candidates, n, h, h, 0, BasisFamily::v_prime);
    }
    return finish(g, 0, report.multiplicity, std::move(candidates));
}

EigenbasisReport basis_minus_two(const CircuitPower& g)
{
    g.require_non_complete();
    const auto report = mult_minus_two(g);
    const auto n = g.n();
    const auto gg = report.params.g;
    const auto h = report.params.h;
    std::vector<BasisVector> candidates;
    if (report.case_tag != EigCase::minus_two_ord_ge && n % (2 * gg) == 0) {
        append_alternating_family(candidates, n, gg, gg, -2, BasisFamily::u_prime);
    }
    append_difference_family(candidates, n, h, h - 1, -2, BasisFamily::v_prime);
    return finish(g, -2, report.multiplicity, std::move(candidates));
}

EigenbasisReport basis_minus_one(const CircuitPower& g)
{
    const auto report = mult_minus_one(g);
    std::vector<BasisVector> candidates;
    append_difference_family(candidates, g.n(), report.params.g, report.params.g - 1, -1, BasisFamily::u_prime);
    return finish(g, -1, report.multiplicity, std::move(candidates));
}

EigenbasisReport eigenbasis(const CircuitPower& g, std::int64_t lambda)
{
    g.require_non_complete();
    if (!is_integer_candidate(g, lambda)) {
        throw EigenvalueAbsentError(std::to_string(lambda) + " is never an eigenvalue of " + g.name()
                                    + " (integer eigenvalues lie in {-3,-2,-1,0,1,2d})");
    }
    const auto predicted = integer_multiplicity(g, lambda);
    if (predicted.multiplicity == 0) {
        throw EigenvalueAbsentError(std::to_string(lambda) + " is not an eigenvalue of " + g.name() + " ("
                                    + std::string(to_string(predicted.case_tag)) + ")");
    }
    if (lambda == 2 * g.d()) return basis_all_ones(g);
    switch (lambda) {
    case 1:
    case -3: return basis_pm_one(g, lambda);
    case 0: return basis_kernel(g);
    case -1: return basis_minus_one(g);
    case -2: return basis_minus_two(g);
    default: break;
    }
    throw std::logic_error("unreachable eigenvalue dispatch");
}

bool orthogonality_check(const EigenbasisReport& report)
{
    for (std::size_t i = 0; i < report.vectors.size(); ++i) {
        for (std::size_t j = i + 1; j < report.vectors.size(); ++j) {
            if (dot(report.vectors[i].entries, report.vectors[j].entries) != 0) return false;
        }
    }
    return true;
}

} // namespace circpow
