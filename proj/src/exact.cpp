#include "circpow/exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace circpow {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

struct CheckedOps {
    using Scalar = std::int64_t;
    static Scalar cross(Scalar a, Scalar b, Scalar c, Scalar d)
    {
        Scalar ab, cd, diff;
        if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd)
            || __builtin_sub_overflow(ab, cd, &diff)) {
            throw Overflow{};
        }
        return diff;
    }
};

struct BigOps {
    using Scalar = BigInt;
    static Scalar cross(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) { return a * b - c * d; }
};

// Column-oriented Bareiss elimination on a rows x cols matrix stored
// row-major. Every intermediate entry is a minor of the input, so the
// division by the previous pivot is exact.
template <class Ops>
IndependentSet bareiss(std::vector<typename Ops::Scalar> m, std::size_t rows, std::size_t cols)
{
    using Scalar = typename Ops::Scalar;
    IndependentSet out;
    Scalar previous = 1;
    std::size_t r = 0;
    auto at = [&](std::size_t i, std::size_t j) -> Scalar& { return m[i * cols + j]; };

    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) {
            for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot, j), at(r, j));
        }
        out.pivots.push_back(c);
        const Scalar p = at(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Scalar lead = at(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                Scalar value = Ops::cross(p, at(i, j), lead, at(r, j));
                at(i, j) = value / previous;
            }
            at(i, c) = 0;
        }
        previous = p;
        ++r;
    }
    out.rank = static_cast<std::int64_t>(r);
    return out;
}

IndependentSet eliminate(const std::vector<std::int64_t>& entries, std::size_t rows, std::size_t cols)
{
    try {
        return bareiss<CheckedOps>(entries, rows, cols);
    } catch (const Overflow&) {
        std::vector<BigInt> big(entries.begin(), entries.end());
        return bareiss<BigOps>(std::move(big), rows, cols);
    }
}

} // namespace

bool verify_exact(const AdjacencyMatrix& a, std::span<const int> v, std::int64_t lambda)
{
    const auto n = a.order();
    if (static_cast<std::int64_t>(v.size()) != n) {
        throw std::invalid_argument("vector length " + std::to_string(v.size()) + " does not match order "
                                    + std::to_string(n));
    }
    for (std::int64_t i = 0; i < n; ++i) {
        std::int64_t sum = 0;
        const auto row = a.row(i);
        for (std::int64_t j = 0; j < n; ++j) {
            if (row[static_cast<std::size_t>(j)] != 0) sum += v[static_cast<std::size_t>(j)];
        }
        if (sum != lambda * v[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

IndependentSet independent_subset(std::span<const IntVector> vectors)
{
    if (vectors.empty()) return {};
    const std::size_t rows = vectors.front().size();
    const std::size_t cols = vectors.size();
    for (const auto& v : vectors) {
        if (v.size() != rows) throw std::invalid_argument("exact_rank: vectors of unequal length");
    }
    std::vector<std::int64_t> m(rows * cols);
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < rows; ++i) m[i * cols + j] = vectors[j][i];
    }
    return eliminate(m, rows, cols);
}

std::int64_t exact_rank(std::span<const IntVector> vectors)
{
    return independent_subset(vectors).rank;
}

std::int64_t exact_eigen_multiplicity(const AdjacencyMatrix& a, std::int64_t lambda)
{
    const auto n = static_cast<std::size_t>(a.order());
    std::vector<std::int64_t> m(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i * n + j] = a(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)) - (i == j ? lambda : 0);
        }
    }
    return static_cast<std::int64_t>(n) - eliminate(m, n, n).rank;
}

std::int64_t dot(std::span<const int> a, std::span<const int> b)
{
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += static_cast<std::int64_t>(a[i]) * b[i];
    return sum;
}

} // namespace circpow
