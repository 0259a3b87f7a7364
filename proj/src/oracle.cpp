#include "circpow/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace circpow {

namespace {

struct Rotation {
    std::size_t p;
    std::size_t q;
    double c;
    double s;
    double t;
};

double off_diagonal_norm(const DenseMatrix& a)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto row = a.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) sum += row[j] * row[j];
        }
    }
    return std::sqrt(sum);
}

void rotate_rows(std::span<double> x, std::span<double> y, double c, double s)
{
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double a = x[k];
        const double b = y[k];
        x[k] = c * a - s * b;
        y[k] = s * a + c * b;
    }
}

// Cyclic Jacobi in round-robin order: each round applies n/2 disjoint
// rotations as A <- J^T A J, touching memory row by row. `vt` (if any)
// accumulates the eigenvectors as rows.
int jacobi_in_place(DenseMatrix& a, DenseMatrix* vt, const JacobiOptions& options, double& final_off)
{
    const std::size_t n = a.rows();
    const double norm = a.frobenius_norm();
    const double threshold = options.tolerance * norm;
    // If every remaining element is below `skip`, the off-diagonal mass is
    // at most n * skip < threshold.
    const double skip = 1e-2 * threshold / static_cast<double>(std::max<std::size_t>(n, 1));

    const std::size_t players = n + (n % 2);
    std::vector<std::size_t> seat(players);
    std::iota(seat.begin(), seat.end(), std::size_t{0});
    std::vector<Rotation> batch;
    batch.reserve(players / 2);

    for (int sweep = 0;; ++sweep) {
        final_off = off_diagonal_norm(a);
        if (final_off <= threshold) return sweep;
        if (sweep >= options.max_sweeps) {
            throw NonConvergenceError("Jacobi did not converge in " + std::to_string(options.max_sweeps)
                                      + " sweeps (off-diagonal norm " + std::to_string(final_off) + ")");
        }
        for (std::size_t round = 0; round + 1 < players; ++round) {
            batch.clear();
            for (std::size_t i = 0; i < players / 2; ++i) {
                auto p = seat[i];
                auto q = seat[players - 1 - i];
                if (p > q) std::swap(p, q);
                if (q >= n) continue; // bye for odd n
                const double apq = a(p, q);
                if (std::abs(apq) < skip) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                batch.push_back({p, q, c, t * c, t});
            }
            if (!batch.empty()) {
                std::vector<double> diag_p(batch.size());
                std::vector<double> diag_q(batch.size());
                for (std::size_t b = 0; b < batch.size(); ++b) {
                    const auto& r = batch[b];
                    const double apq = a(r.p, r.q);
                    diag_p[b] = a(r.p, r.p) - r.t * apq;
                    diag_q[b] = a(r.q, r.q) + r.t * apq;
                }
                for (const auto& r : batch) rotate_rows(a.row(r.p), a.row(r.q), r.c, r.s);
                for (std::size_t k = 0; k < n; ++k) {
                    auto row = a.row(k);
                    for (const auto& r : batch) {
                        const double x = row[r.p];
                        const double y = row[r.q];
                        row[r.p] = r.c * x - r.s * y;
                        row[r.q] = r.s * x + r.c * y;
                    }
                }
                for (std::size_t b = 0; b < batch.size(); ++b) {
                    const auto& r = batch[b];
                    a(r.p, r.q) = 0.0;
                    a(r.q, r.p) = 0.0;
                    a(r.p, r.p) = diag_p[b];
                    a(r.q, r.q) = diag_q[b];
                }
                if (vt != nullptr) {
                    for (const auto& r : batch) rotate_rows(vt->row(r.p), vt->row(r.q), r.c, r.s);
                }
            }
            // Rotate every seat but the first.
            std::rotate(seat.begin() + 1, seat.end() - 1, seat.end());
        }
    }
}

struct Block {
    DenseMatrix matrix;
    DenseMatrix basis; // rows are orthonormal vectors of R^n spanning the block
};

void check_involution(const DenseMatrix& a, const std::vector<std::size_t>& sigma)
{
    const auto n = a.rows();
    if (sigma.size() != n) throw std::invalid_argument("involution has wrong length");
    for (std::size_t i = 0; i < n; ++i) {
        if (sigma[i] >= n || sigma[sigma[i]] != i) throw std::invalid_argument("permutation is not an involution");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (a(sigma[i], sigma[j]) != a(i, j)) {
                throw std::invalid_argument("matrix is not invariant under the given involution");
            }
        }
    }
}

// Even block: e_f for fixed points, (e_i + e_si)/sqrt2 for pairs.
// Odd block: (e_i - e_si)/sqrt2 for pairs.
std::pair<Block, Block> split(const DenseMatrix& a, const std::vector<std::size_t>& sigma)
{
    const auto n = a.rows();
    const double r2 = 1.0 / std::sqrt(2.0);
    std::vector<std::vector<std::pair<std::size_t, double>>> even;
    std::vector<std::vector<std::pair<std::size_t, double>>> odd;
    for (std::size_t i = 0; i < n; ++i) {
        if (sigma[i] == i) {
            even.push_back({{i, 1.0}});
        } else if (i < sigma[i]) {
            even.push_back({{i, r2}, {sigma[i], r2}});
            odd.push_back({{i, r2}, {sigma[i], -r2}});
        }
    }
    auto build = [&](const auto& vectors) {
        Block block{DenseMatrix(vectors.size(), vectors.size()), DenseMatrix(vectors.size(), n)};
        for (std::size_t x = 0; x < vectors.size(); ++x) {
            for (const auto& [i, w] : vectors[x]) block.basis(x, i) = w;
            for (std::size_t y = 0; y < vectors.size(); ++y) {
                double sum = 0.0;
                for (const auto& [i, wi] : vectors[x]) {
                    for (const auto& [j, wj] : vectors[y]) sum += wi * a(i, j) * wj;
                }
                block.matrix(x, y) = sum;
            }
        }
        return block;
    };
    return {build(even), build(odd)};
}

void check_symmetric(const DenseMatrix& a)
{
    if (a.rows() != a.cols()) throw std::invalid_argument("symmetric_eigen: matrix is not square");
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            if (a(i, j) != a(j, i)) {
                throw std::invalid_argument("symmetric_eigen: matrix is not symmetric at (" + std::to_string(i) + ", "
                                            + std::to_string(j) + ")");
            }
        }
    }
}

} // namespace

DenseMatrix DenseMatrix::from(const AdjacencyMatrix& a)
{
    const auto n = static_cast<std::size_t>(a.order());
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto src = a.row(static_cast<std::int64_t>(i));
        for (std::size_t j = 0; j < n; ++j) m(i, j) = src[j];
    }
    return m;
}

DenseMatrix DenseMatrix::identity(std::size_t n)
{
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double DenseMatrix::frobenius_norm() const noexcept
{
    double sum = 0.0;
    for (double x : data_) sum += x * x;
    return std::sqrt(sum);
}

DenseMatrix DenseMatrix::transposed() const
{
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto out = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            const auto brow = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) out[j] += aik * brow[j];
        }
    }
    return c;
}

EigenDecomposition symmetric_eigen(const DenseMatrix& a, const JacobiOptions& options)
{
    check_symmetric(a);
    const auto n = a.rows();
    EigenDecomposition out;
    if (n == 0) return out;

    // Eigenpairs as (value, row of V^T in R^n).
    std::vector<double> values;
    DenseMatrix vt_full;
    double off = 0.0;

    auto solve_block = [&](DenseMatrix block, const DenseMatrix* basis) {
        const auto m = block.rows();
        if (m == 0) return;
        DenseMatrix vt;
        if (options.compute_vectors) vt = DenseMatrix::identity(m);
        double block_off = 0.0;
        out.sweeps = std::max(out.sweeps, jacobi_in_place(block, options.compute_vectors ? &vt : nullptr, options,
                                                          block_off));
        off = std::hypot(off, block_off);
        const auto first = values.size();
        for (std::size_t i = 0; i < m; ++i) values.push_back(block(i, i));
        if (options.compute_vectors) {
            const DenseMatrix lifted = basis != nullptr ? vt * *basis : vt;
            for (std::size_t i = 0; i < m; ++i) {
                auto dst = vt_full.row(first + i);
                const auto src = lifted.row(i);
                std::copy(src.begin(), src.end(), dst.begin());
            }
        }
    };

    if (options.compute_vectors) vt_full = DenseMatrix(n, n);
    if (options.involution) {
        check_involution(a, *options.involution);
        auto [even, odd] = split(a, *options.involution);
        solve_block(std::move(even.matrix), &even.basis);
        solve_block(std::move(odd.matrix), &odd.basis);
    } else {
        solve_block(a, nullptr);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return values[x] < values[y]; });
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = values[order[i]];

    if (!options.compute_vectors) {
        out.residual = off;
        return out;
    }
    out.vectors = DenseMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        const auto src = vt_full.row(order[col]);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, col) = src[i];
    }
    const DenseMatrix av = a * out.vectors;
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            residual = std::max(residual, std::abs(av(i, j) - out.vectors(i, j) * out.values[j]));
        }
    }
    out.residual = residual;
    return out;
}

EigenDecomposition symmetric_eigen(const AdjacencyMatrix& a, const JacobiOptions& options)
{
    return symmetric_eigen(DenseMatrix::from(a), options);
}

std::vector<std::size_t> reflection_involution(std::size_t n)
{
    std::vector<std::size_t> sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = (n - i) % n;
    return sigma;
}

std::vector<std::size_t> reversal_involution(std::size_t n)
{
    std::vector<std::size_t> sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = n - 1 - i;
    return sigma;
}

MultiplicityCount numeric_multiplicity(std::span<const double> values, double lambda, double tol)
{
    if (!(tol > 0.0)) throw std::domain_error("numeric_multiplicity: tolerance must be positive");
    MultiplicityCount out;
    for (double v : values) {
        const double gap = std::abs(v - lambda);
        if (gap <= tol) {
            ++out.count;
        } else if (gap < 10.0 * tol) {
            out.ambiguous = true;
        }
    }
    return out;
}

MultiplicityCount numeric_multiplicity(const EigenDecomposition& dec, double lambda, double tol)
{
    return numeric_multiplicity(dec.values, lambda, tol);
}

EigenDecomposition path_power_spectrum(const PathPower& g, const JacobiOptions& options)
{
    return symmetric_eigen(adjacency(g), options);
}

double orthonormality_error(const DenseMatrix& v)
{
    const DenseMatrix gram = v.transposed() * v;
    double err = 0.0;
    for (std::size_t i = 0; i < gram.rows(); ++i) {
        for (std::size_t j = 0; j < gram.cols(); ++j) {
            err = std::max(err, std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)));
        }
    }
    return err;
}

} // namespace circpow
