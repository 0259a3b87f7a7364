#include "circpow/circulant.hpp"

#include <algorithm>
#include <string>

namespace circpow {

namespace {

// Dense matrices beyond this order would need gigabytes.
constexpr std::int64_t kMaxDenseOrder = 1 << 15;

void check_range(std::int64_t value, std::int64_t lo, const char* what)
{
    if (value < lo || value > kMaxParameter) {
        throw std::domain_error(std::string(what) + " = " + std::to_string(value) + " out of range ["
                                + std::to_string(lo) + ", " + std::to_string(kMaxParameter) + "]");
    }
}

} // namespace

CirculantGraph::CirculantGraph(std::int64_t n, std::vector<std::int64_t> jumps) : n_(n), jumps_(std::move(jumps))
{
    check_range(n, 1, "n");
    std::sort(jumps_.begin(), jumps_.end());
    jumps_.erase(std::unique(jumps_.begin(), jumps_.end()), jumps_.end());
    for (auto j : jumps_) {
        if (j <= 0 || j >= n_) {
            throw std::domain_error("jump " + std::to_string(j) + " outside 1.." + std::to_string(n_ - 1));
        }
        if (!std::binary_search(jumps_.begin(), jumps_.end(), n_ - j)) {
            throw std::domain_error("jump set not symmetric: " + std::to_string(j) + " present but "
                                    + std::to_string(n_ - j) + " missing");
        }
    }
}

CirculantGraph CirculantGraph::complete(std::int64_t n)
{
    check_range(n, 1, "n");
    std::vector<std::int64_t> all(static_cast<std::size_t>(n - 1));
    for (std::int64_t j = 1; j < n; ++j) all[static_cast<std::size_t>(j - 1)] = j;
    return CirculantGraph(n, std::move(all));
}

bool CirculantGraph::has_jump(std::int64_t j) const
{
    return std::binary_search(jumps_.begin(), jumps_.end(), j);
}

CircuitPower::CircuitPower(std::int64_t n, std::int64_t d) : n_(n), d_(d)
{
    check_range(n, 3, "n");
    check_range(d, 1, "d");
}

void CircuitPower::require_non_complete() const
{
    if (complete()) {
        throw CompleteGraphError(name() + " is the complete graph K_" + std::to_string(n_)
                                 + "; the multiplicity theorems need 1 <= d < (n-1)/2");
    }
}

std::vector<std::int64_t> CircuitPower::jump_set() const
{
    std::vector<std::int64_t> jumps;
    if (complete()) {
        for (std::int64_t j = 1; j < n_; ++j) jumps.push_back(j);
        return jumps;
    }
    jumps.reserve(static_cast<std::size_t>(2 * d_));
    for (std::int64_t j = 1; j <= d_; ++j) jumps.push_back(j);
    for (std::int64_t j = n_ - d_; j < n_; ++j) jumps.push_back(j);
    return jumps;
}

CirculantGraph CircuitPower::as_circulant() const
{
    return CirculantGraph(n_, jump_set());
}

std::string CircuitPower::name() const
{
    return "C_" + std::to_string(n_) + "^(" + std::to_string(d_) + ")";
}

CircuitPower circuit_power(std::int64_t n, std::int64_t d)
{
    return CircuitPower(n, d);
}

std::vector<std::int64_t> jump_set(const CircuitPower& g)
{
    return g.jump_set();
}

PathPower::PathPower(std::int64_t n, std::int64_t d) : n_(n), d_(d)
{
    check_range(n, 1, "n");
    check_range(d, 1, "d");
}

std::string PathPower::name() const
{
    return "P_" + std::to_string(n_) + "^(" + std::to_string(d_) + ")";
}

AdjacencyMatrix::AdjacencyMatrix(std::int64_t n) : n_(n)
{
    if (n < 1 || n > kMaxDenseOrder) {
        throw std::length_error("dense adjacency of order " + std::to_string(n) + " not supported");
    }
    data_.assign(static_cast<std::size_t>(n * n), 0);
}

void AdjacencyMatrix::connect(std::int64_t i, std::int64_t j)
{
    if (i == j) throw std::domain_error("self-loop at vertex " + std::to_string(i));
    data_[static_cast<std::size_t>(i * n_ + j)] = 1;
    data_[static_cast<std::size_t>(j * n_ + i)] = 1;
}

bool AdjacencyMatrix::is_symmetric() const noexcept
{
    for (std::int64_t i = 0; i < n_; ++i) {
        if ((*this)(i, i) != 0) return false;
        for (std::int64_t j = i + 1; j < n_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) return false;
        }
    }
    return true;
}

std::vector<std::int64_t> AdjacencyMatrix::degrees() const
{
    std::vector<std::int64_t> deg(static_cast<std::size_t>(n_), 0);
    for (std::int64_t i = 0; i < n_; ++i) {
        for (auto a : row(i)) deg[static_cast<std::size_t>(i)] += a;
    }
    return deg;
}

AdjacencyMatrix adjacency(const CirculantGraph& g)
{
    const auto n = g.order();
    AdjacencyMatrix a(n);
    for (std::int64_t i = 0; i < n; ++i) {
        for (auto j : g.jumps()) {
            const auto k = (i + j) % n;
            if (i < k) a.connect(i, k);
        }
    }
    return a;
}

AdjacencyMatrix adjacency(const CircuitPower& g)
{
    return adjacency(g.as_circulant());
}

AdjacencyMatrix adjacency(const PathPower& g)
{
    const auto n = g.n();
    AdjacencyMatrix a(n);
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = i + 1; j < n && j - i <= g.d(); ++j) a.connect(i, j);
    }
    return a;
}

} // namespace circpow
