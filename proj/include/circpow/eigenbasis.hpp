#pragma once

#include "circpow/circulant.hpp"
#include "circpow/exact.hpp"

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace circpow {

/// Raised when a basis is requested for an eigenvalue the graph lacks.
class EigenvalueAbsentError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class BasisFamily {
    all_ones,  // eigenvalue 2d
    period6_a, // (1, 1, 0, -1, -1, 0, ...)
    period6_b, // (1, 0, -1, -1, 0, 1, ...)
    u_prime,
    v_prime,
};

std::string_view to_string(BasisFamily f);

/// Which pattern a u'/v' vector follows.
enum class Pattern {
    constant,    // all ones / period-6 vectors
    difference,  // +1 at k-1 + m*p, -1 at p-1 + m*p
    alternating, // (-1)^m at k-1 + m*p
};

/// A {-1, 0, 1} vector with its provenance. Positions are 0-based: the unit
/// vector e_j of the 1-based constructions sits at index (j - 1) mod n.
struct BasisVector {
    IntVector entries;
    std::int64_t eigenvalue = 0;
    BasisFamily family = BasisFamily::all_ones;
    Pattern pattern = Pattern::constant;
    std::int64_t k = 1;      // 1-based index within the family
    std::int64_t period = 1; // g or h of the construction, 6 or 1 otherwise
    bool verified = false;   // A v = lambda v checked exactly
};

struct EigenbasisReport {
    std::int64_t eigenvalue = 0;
    std::vector<BasisVector> vectors;
    std::int64_t rank = 0;
    std::int64_t predicted_multiplicity = 0;
    std::int64_t candidates = 0; // vectors built before reduction
    bool reduced = false;        // some candidates were dropped as dependent
    bool orthogonal = false;

    bool all_verified() const;
    bool simply_structured() const;
};

/// Difference pattern: +1 at (k-1) + m p and -1 at (p-1) + m p, m = 0..n/p-1.
IntVector difference_vector(std::int64_t n, std::int64_t period, std::int64_t k);

/// Alternating pattern: (-1)^m at (k-1) + m p; needs 2p | n.
IntVector alternating_vector(std::int64_t n, std::int64_t period, std::int64_t k);

// Each builder verifies every vector against the adjacency matrix, computes
// the exact rank and the orthogonality flag.
EigenbasisReport basis_all_ones(const CircuitPower& g);
/// lambda in {1, -3}; throws EigenvalueAbsentError unless 6 | n and d is
/// 1 (resp. 4) mod 6.
EigenbasisReport basis_pm_one(const CircuitPower& g, std::int64_t lambda);
EigenbasisReport basis_kernel(const CircuitPower& g);
EigenbasisReport basis_minus_two(const CircuitPower& g);
EigenbasisReport basis_minus_one(const CircuitPower& g);

/// Dispatches on lambda. Throws EigenvalueAbsentError when the predicted
/// multiplicity is zero or lambda is not an integer candidate.
EigenbasisReport eigenbasis(const CircuitPower& g, std::int64_t lambda);

/// True iff all pairwise dot products vanish.
bool orthogonality_check(const EigenbasisReport& report);

} // namespace circpow
