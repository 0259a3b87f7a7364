#pragma once

#include "circpow/circulant.hpp"

#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace circpow {

/// Default absolute tolerance for merging floating eigenvalues.
inline constexpr double kDefaultGroupTolerance = 1e-9;

struct SpectrumEntry {
    std::int64_t r;
    double value;
};

using Spectrum = std::vector<SpectrumEntry>;

struct SpectrumGroup {
    double value;
    std::int64_t multiplicity;
    std::vector<std::int64_t> indices;
};

struct GroupedSpectrum {
    std::vector<SpectrumGroup> groups; // strictly increasing values
    /// Set when two neighbouring groups are closer than 10 * tol.
    bool ill_conditioned = false;
    std::vector<std::string> warnings;

    std::int64_t multiplicity_near(double value, double tol) const;
};

/// lambda_r = sum over jumps of cos(2 pi j r / n), r = 0..n-1.
///
/// The angle index j*r is reduced modulo n in integers and folded onto
/// [0, n/2], so lambda_r and lambda_{n-r} come out bit-identical.
Spectrum circulant_spectrum(const CirculantGraph& g);

/// Closed form for C_n^(d): lambda_0 = 2d and
/// lambda_r = sin((2d+1) r pi / n) / sin(r pi / n) - 1.
///
/// Falls back to the cosine sum where sin(r pi / n) < 1e-6. Complete
/// powers get the K_n spectrum {n-1, -1 (n-1 times)}.
Spectrum circuit_power_spectrum(const CircuitPower& g);

/// Sorted copy of the spectrum values.
std::vector<double> sorted_values(const Spectrum& s);

/// Merges entries whose values differ by at most tol, transitively. When the
/// entries cover r = 0..n-1, r and n-r are always put in the same group.
GroupedSpectrum group_spectrum(const Spectrum& entries, double tol = kDefaultGroupTolerance);

/// Same merging rule for bare values (e.g. numeric eigenvalues); indices
/// refer to positions in `values`.
GroupedSpectrum group_values(std::span<const double> values, double tol = kDefaultGroupTolerance);

/// The Dirichlet-kernel ratio f_d(phi) = sin((2d+1) phi / 2) / sin(phi / 2)
/// on [0, 2 pi], with f_d(0) = f_d(2 pi) = 2d + 1.
class DirichletKernel {
public:
    explicit DirichletKernel(std::int64_t d);

    std::int64_t d() const noexcept { return d_; }
    /// q = 2 pi / (2d + 1); the zeros of f_d are k q for k = 1..2d.
    double q() const noexcept { return 2.0 * std::numbers::pi / static_cast<double>(2 * d_ + 1); }

    /// Throws std::domain_error outside [0, 2 pi].
    double operator()(double phi) const;

    /// u(phi) = 1 / sin(phi / 2), an upper bound of |f_d| on (0, 2 pi).
    double upper_bound(double phi) const;

private:
    std::int64_t d_;
};

double f_d(const DirichletKernel& kernel, double phi);

struct MultTwoBound {
    double sharp;   // u(2q) - 1 = 1 / sin(2 pi / (2d + 1)) - 1
    double relaxed; // d / pi - 1
};

MultTwoBound mult_two_bound(std::int64_t d);

} // namespace circpow
