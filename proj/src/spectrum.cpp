#include "circpow/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace circpow {

namespace {

constexpr double kPi = std::numbers::pi;

// cos(2 pi k / n) with k folded onto 0..n/2.
std::vector<double> cosine_table(std::int64_t n)
{
    std::vector<double> table(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
        const auto folded = std::min(k, n - k);
        table[static_cast<std::size_t>(k)] = std::cos(2.0 * kPi * static_cast<double>(folded) / static_cast<double>(n));
    }
    return table;
}

double cosine_sum(const std::vector<double>& table, std::span<const std::int64_t> jumps, std::int64_t n, std::int64_t r)
{
    double sum = 0.0;
    for (auto j : jumps) {
        // j, r < n <= 2^31 - 1, so the product fits.
        const auto k = static_cast<std::int64_t>((static_cast<std::uint64_t>(j) * static_cast<std::uint64_t>(r))
                                                 % static_cast<std::uint64_t>(n));
        sum += table[static_cast<std::size_t>(k)];
    }
    return sum;
}

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

GroupedSpectrum build_groups(std::span<const double> values, std::span<const std::int64_t> labels, double tol,
                             bool pair_conjugates)
{
    if (!(tol > 0.0)) throw std::domain_error("grouping tolerance must be positive");
    const auto count = values.size();
    GroupedSpectrum out;
    if (count == 0) return out;

    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });

    DisjointSets sets(count);
    for (std::size_t i = 1; i < count; ++i) {
        if (values[order[i]] - values[order[i - 1]] <= tol) sets.unite(order[i - 1], order[i]);
    }
    if (pair_conjugates) {
        // labels are r = 0..n-1 in some order; join r with n - r.
        const auto n = static_cast<std::int64_t>(count);
        std::vector<std::size_t> position(count);
        for (std::size_t i = 0; i < count; ++i) position[static_cast<std::size_t>(labels[i])] = i;
        for (std::int64_t r = 1; r < n; ++r) {
            sets.unite(position[static_cast<std::size_t>(r)], position[static_cast<std::size_t>(n - r)]);
        }
    }

    // Groups in order of their smallest member.
    std::vector<std::size_t> root_to_group(count, count);
    for (auto idx : order) {
        const auto root = sets.find(idx);
        if (root_to_group[root] == count) {
            root_to_group[root] = out.groups.size();
            out.groups.push_back({0.0, 0, {}});
        }
        auto& group = out.groups[root_to_group[root]];
        group.value += values[idx];
        group.multiplicity += 1;
        group.indices.push_back(labels[idx]);
    }
    for (auto& group : out.groups) {
        group.value /= static_cast<double>(group.multiplicity);
        std::sort(group.indices.begin(), group.indices.end());
    }
    std::sort(out.groups.begin(), out.groups.end(), [](const auto& a, const auto& b) { return a.value < b.value; });

    for (std::size_t i = 1; i < out.groups.size(); ++i) {
        const double gap = out.groups[i].value - out.groups[i - 1].value;
        if (gap < 10.0 * tol) {
            out.ill_conditioned = true;
            std::ostringstream msg;
            msg << "groups at " << out.groups[i - 1].value << " and " << out.groups[i].value << " are only " << gap
                << " apart (tolerance " << tol << ")";
            out.warnings.push_back(msg.str());
        }
    }
    return out;
}

} // namespace

std::int64_t GroupedSpectrum::multiplicity_near(double value, double tol) const
{
    std::int64_t total = 0;
    for (const auto& group : groups) {
        if (std::abs(group.value - value) <= tol) total += group.multiplicity;
    }
    return total;
}

Spectrum circulant_spectrum(const CirculantGraph& g)
{
    const auto n = g.order();
    const auto table = cosine_table(n);
    Spectrum out(static_cast<std::size_t>(n));
    for (std::int64_t r = 0; r < n; ++r) {
        out[static_cast<std::size_t>(r)] = {r, cosine_sum(table, g.jumps(), n, r)};
    }
    return out;
}

Spectrum circuit_power_spectrum(const CircuitPower& g)
{
    const auto n = g.n();
    const auto d = g.d();
    Spectrum out(static_cast<std::size_t>(n));
    if (g.complete()) {
        out[0] = {0, static_cast<double>(n - 1)};
        for (std::int64_t r = 1; r < n; ++r) out[static_cast<std::size_t>(r)] = {r, -1.0};
        return out;
    }

    std::vector<double> table;
    std::vector<std::int64_t> jumps;
    const auto two_n = static_cast<std::uint64_t>(2 * n);
    const auto width = static_cast<std::uint64_t>(2 * d + 1) % two_n;

    out[0] = {0, static_cast<double>(2 * d)};
    // lambda_r = lambda_{n-r}; evaluate the lower half and mirror it so the
    // symmetry holds bit for bit.
    for (std::int64_t r = 1; r <= n / 2; ++r) {
        const double denom = std::sin(kPi * static_cast<double>(r) / static_cast<double>(n));
        double value;
        if (denom < 1e-6) {
            if (table.empty()) {
                table = cosine_table(n);
                jumps = g.jump_set();
            }
            value = cosine_sum(table, jumps, n, r);
        } else {
            // (2d+1) r reduced modulo 2n keeps the sine argument in [0, 2 pi).
            const auto m = static_cast<std::int64_t>((width * static_cast<std::uint64_t>(r)) % two_n);
            value = std::sin(kPi * static_cast<double>(m) / static_cast<double>(n)) / denom - 1.0;
        }
        out[static_cast<std::size_t>(r)] = {r, value};
        out[static_cast<std::size_t>(n - r)] = {n - r, value};
    }
    return out;
}

std::vector<double> sorted_values(const Spectrum& s)
{
    std::vector<double> values;
    values.reserve(s.size());
    for (const auto& e : s) values.push_back(e.value);
    std::sort(values.begin(), values.end());
    return values;
}

GroupedSpectrum group_spectrum(const Spectrum& entries, double tol)
{
    std::vector<double> values;
    std::vector<std::int64_t> labels;
    values.reserve(entries.size());
    labels.reserve(entries.size());
    std::vector<bool> seen(entries.size(), false);
    bool full_index_set = true;
    for (const auto& e : entries) {
        values.push_back(e.value);
        labels.push_back(e.r);
        if (e.r < 0 || e.r >= static_cast<std::int64_t>(entries.size()) || seen[static_cast<std::size_t>(e.r)]) {
            full_index_set = false;
        } else {
            seen[static_cast<std::size_t>(e.r)] = true;
        }
    }
    return build_groups(values, labels, tol, full_index_set);
}

GroupedSpectrum group_values(std::span<const double> values, double tol)
{
    std::vector<std::int64_t> labels(values.size());
    std::iota(labels.begin(), labels.end(), std::int64_t{0});
    return build_groups(values, labels, tol, false);
}

DirichletKernel::DirichletKernel(std::int64_t d) : d_(d)
{
    if (d < 1 || d > kMaxParameter) throw std::domain_error("Dirichlet kernel needs d >= 1");
}

double DirichletKernel::operator()(double phi) const
{
    if (!(phi >= 0.0 && phi <= 2.0 * kPi)) throw std::domain_error("f_d is defined on [0, 2 pi]");
    if (phi == 0.0 || phi == 2.0 * kPi) return static_cast<double>(2 * d_ + 1);
    return std::sin(static_cast<double>(2 * d_ + 1) * phi / 2.0) / std::sin(phi / 2.0);
}

double DirichletKernel::upper_bound(double phi) const
{
    return 1.0 / std::sin(phi / 2.0);
}

double f_d(const DirichletKernel& kernel, double phi)
{
    return kernel(phi);
}

MultTwoBound mult_two_bound(std::int64_t d)
{
    const DirichletKernel kernel(d);
    return {kernel.upper_bound(2.0 * kernel.q()) - 1.0, static_cast<double>(d) / kPi - 1.0};
}

} // namespace circpow
