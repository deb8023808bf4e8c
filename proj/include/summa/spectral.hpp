#pragma once

#include "summa/kernels.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace summa::spectral {

using cplx = std::complex<double>;

// Samples of a function on the uniform grid x_j = -pi + 2 pi j / G per
// coordinate, row-major, G a power of two.
struct GridFunction {
    int dim = 1;
    std::size_t points_per_dim = 0;
    std::vector<cplx> samples;

    GridFunction() = default;
    GridFunction(int d, std::size_t g);

    std::size_t size() const { return samples.size(); }
    double coordinate(std::size_t j) const;
    // Multi-index of the flat offset, then back.
    std::vector<std::size_t> unflatten(std::size_t idx) const;
    std::size_t flatten(std::span<const std::size_t> j) const;

    double max_abs_imag() const;
    std::vector<double> real_parts() const;
};

// Fourier coefficients indexed by k with -G/2 <= k_i < G/2, stored in
// natural signed order (position k_i + G/2 along each axis).
struct Spectrum {
    int dim = 1;
    std::size_t points_per_dim = 0;
    std::vector<cplx> coefficients;

    Spectrum() = default;
    Spectrum(int d, std::size_t g);

    cplx& at(std::span<const long> k);
    const cplx& at(std::span<const long> k) const;
    long half() const { return static_cast<long>(points_per_dim) / 2; }
};

// Discrete Fourier analysis: c(k) ~ (2pi)^-d int f e^{-ik.x}, exact for
// trigonometric polynomials of degree < G/2 per coordinate.
Spectrum analyze(const GridFunction& f);
GridFunction synthesize(const Spectrum& c);

// Serial reference paths (the parallel and serial routes must agree bitwise).
Spectrum analyze_serial(const GridFunction& f);
GridFunction synthesize_serial(const Spectrum& c);

// Zero all coefficients outside the ellq ball of radius n and synthesize.
GridFunction partial_sum(const Spectrum& c, kernels::Region region, long n);
GridFunction partial_sum_rect(const Spectrum& c, std::span<const long> n);

// Apply the method multiplier of `spec` and synthesize.
Spectrum mean_spectrum(const Spectrum& c, const kernels::KernelSpec& spec);
GridFunction summability_mean(const Spectrum& c, const kernels::KernelSpec& spec);

struct ConjugateKind {
    bool riesz = false;     // single Riesz transform along `coordinate`
    int coordinate = 0;
    std::vector<int> j;     // product multiplier exponents otherwise
};
Spectrum conjugate_transform(const Spectrum& c, const ConjugateKind& kind);

// Convolution under the (2pi)^-d-normalized product: coefficients multiply.
GridFunction grid_convolve(const GridFunction& f, const GridFunction& g);

// Direct O(G^2) circular convolution, d = 1 only (test oracle).
GridFunction grid_convolve_direct_1d(const GridFunction& f, const GridFunction& g);

double grid_l2_norm(const GridFunction& f);

} // namespace summa::spectral
