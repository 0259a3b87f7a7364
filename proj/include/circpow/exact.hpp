#pragma once

#include "circpow/circulant.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace circpow {

using IntVector = std::vector<int>;

/// True iff A v = lambda v, evaluated in exact integer arithmetic.
/// Throws std::invalid_argument on a dimension mismatch.
bool verify_exact(const AdjacencyMatrix& a, std::span<const int> v, std::int64_t lambda);

struct IndependentSet {
    std::int64_t rank = 0;
    /// Positions of the lexicographically earliest maximal independent subset.
    std::vector<std::size_t> pivots;
};

/// Rank over Q of the given equal-length integer vectors by fraction-free
/// (Bareiss) elimination with the vectors as matrix columns. No floating
/// point is involved; intermediate values that overflow 64 bits are
/// recomputed with arbitrary precision.
IndependentSet independent_subset(std::span<const IntVector> vectors);

std::int64_t exact_rank(std::span<const IntVector> vectors);

/// Integer nullity of (A - lambda I), i.e. the exact multiplicity of the
/// integer lambda as an eigenvalue of the symmetric matrix A.
std::int64_t exact_eigen_multiplicity(const AdjacencyMatrix& a, std::int64_t lambda);

/// Dot product in 64-bit integers.
std::int64_t dot(std::span<const int> a, std::span<const int> b);

} // namespace circpow
