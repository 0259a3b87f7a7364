#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace circpow {

/// Largest order or exponent accepted anywhere in the library.
inline constexpr std::int64_t kMaxParameter = (std::int64_t{1} << 31) - 1;

/// Raised by theorem-level operations that only hold for non-complete
/// circuit powers, i.e. 1 <= d < (n-1)/2.
class CompleteGraphError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Circulant graph on vertices 0..n-1: i ~ j iff (j - i) mod n is a jump.
class CirculantGraph {
public:
    /// Jumps are sorted and deduplicated. Throws std::domain_error unless
    /// every jump lies in 1..n-1 and the set is closed under j -> n - j.
    CirculantGraph(std::int64_t n, std::vector<std::int64_t> jumps);

    static CirculantGraph complete(std::int64_t n);

    std::int64_t order() const noexcept { return n_; }
    const std::vector<std::int64_t>& jumps() const noexcept { return jumps_; }
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(jumps_.size()); }
    bool has_jump(std::int64_t j) const;

    friend bool operator==(const CirculantGraph&, const CirculantGraph&) = default;

private:
    std::int64_t n_;
    std::vector<std::int64_t> jumps_;
};

/// The d-th distance power C_n^(d) of the cycle C_n.
class CircuitPower {
public:
    /// Throws std::domain_error for n < 3, d < 1 or values above kMaxParameter.
    CircuitPower(std::int64_t n, std::int64_t d);

    std::int64_t n() const noexcept { return n_; }
    std::int64_t d() const noexcept { return d_; }

    /// True iff every pair of vertices is within distance d, i.e. 2d >= n - 1.
    bool complete() const noexcept { return 2 * d_ >= n_ - 1; }

    /// Throws CompleteGraphError when complete().
    void require_non_complete() const;

    /// {1..d} u {n-d..n-1}, or {1..n-1} for complete powers.
    std::vector<std::int64_t> jump_set() const;
    CirculantGraph as_circulant() const;

    std::string name() const;

    friend bool operator==(const CircuitPower&, const CircuitPower&) = default;

private:
    std::int64_t n_;
    std::int64_t d_;
};

CircuitPower circuit_power(std::int64_t n, std::int64_t d);
std::vector<std::int64_t> jump_set(const CircuitPower& g);

/// The d-th distance power P_n^(d) of the path on n vertices.
class PathPower {
public:
    /// Throws std::domain_error for n < 1 or d < 1.
    PathPower(std::int64_t n, std::int64_t d);

    std::int64_t n() const noexcept { return n_; }
    std::int64_t d() const noexcept { return d_; }
    bool complete() const noexcept { return d_ >= n_ - 1; }
    std::string name() const;

private:
    std::int64_t n_;
    std::int64_t d_;
};

/// Dense symmetric 0/1 adjacency matrix with zero diagonal, row-major.
class AdjacencyMatrix {
public:
    explicit AdjacencyMatrix(std::int64_t n);

    std::int64_t order() const noexcept { return n_; }
    std::uint8_t operator()(std::int64_t i, std::int64_t j) const noexcept
    {
        return data_[static_cast<std::size_t>(i * n_ + j)];
    }
    std::span<const std::uint8_t> row(std::int64_t i) const noexcept
    {
        return {data_.data() + i * n_, static_cast<std::size_t>(n_)};
    }

    /// Sets both (i, j) and (j, i). Self-loops are rejected.
    void connect(std::int64_t i, std::int64_t j);

    bool is_symmetric() const noexcept;
    std::vector<std::int64_t> degrees() const;

    friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

private:
    std::int64_t n_;
    std::vector<std::uint8_t> data_;
};

AdjacencyMatrix adjacency(const CirculantGraph& g);
AdjacencyMatrix adjacency(const CircuitPower& g);
AdjacencyMatrix adjacency(const PathPower& g);

} // namespace circpow
