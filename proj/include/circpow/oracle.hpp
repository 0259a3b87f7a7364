#pragma once

#include "circpow/circulant.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace circpow {

/// Tolerances of the numeric oracle. They parametrise the test surface and
/// carry no theorem content.
namespace tolerance {
inline constexpr double jacobi_convergence = 1e-12; // off-diagonal mass relative to ||A||_F
inline constexpr double comparison = 1e-7;          // eigenvalue agreement
inline constexpr double orthonormality = 1e-8;      // max |V^T V - I|
} // namespace tolerance

class NonConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Row-major dense real matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static DenseMatrix from(const AdjacencyMatrix& a);
    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    std::span<double> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }

    double frobenius_norm() const noexcept;
    DenseMatrix transposed() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

struct JacobiOptions {
    bool compute_vectors = true;
    int max_sweeps = 100;
    double tolerance = tolerance::jacobi_convergence;
    /// Optional involutive vertex permutation sigma with A[sigma i][sigma j]
    /// = A[i][j]. When given, A is split exactly into its sigma-even and
    /// sigma-odd blocks, each diagonalised by the same Jacobi iteration.
    std::optional<std::vector<std::size_t>> involution;
};

struct EigenDecomposition {
    std::vector<double> values; // ascending
    DenseMatrix vectors;        // column i belongs to values[i]; empty if not requested
    /// max |A V - V diag(values)| with vectors, otherwise the final
    /// off-diagonal Frobenius norm.
    double residual = 0.0;
    int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius mass drops below
/// tolerance * ||A||_F. Throws std::invalid_argument for non-square or
/// non-symmetric input and NonConvergenceError after max_sweeps.
EigenDecomposition symmetric_eigen(const DenseMatrix& a, const JacobiOptions& options = {});
EigenDecomposition symmetric_eigen(const AdjacencyMatrix& a, const JacobiOptions& options = {});

/// i -> -i mod n, under which every circulant adjacency matrix is invariant.
std::vector<std::size_t> reflection_involution(std::size_t n);

/// i -> n - 1 - i, under which every path power is invariant.
std::vector<std::size_t> reversal_involution(std::size_t n);

struct MultiplicityCount {
    std::int64_t count = 0;
    /// Some value lies strictly between tol and 10 tol from lambda.
    bool ambiguous = false;
};

MultiplicityCount numeric_multiplicity(std::span<const double> values, double lambda, double tol);
MultiplicityCount numeric_multiplicity(const EigenDecomposition& dec, double lambda, double tol);

EigenDecomposition path_power_spectrum(const PathPower& g, const JacobiOptions& options = {});

/// max |V^T V - I|.
double orthonormality_error(const DenseMatrix& v);

} // namespace circpow
