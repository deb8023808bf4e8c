#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace summa::fft {

using cplx = std::complex<double>;

// In-place radix-2 transform of length n (a power of two):
//   X_k = sum_j x_j e^{sign * 2 pi i j k / n},  unnormalized.
void transform(cplx* data, std::size_t n, int sign);

// d-dimensional transform of a row-major array with extent g per axis,
// applied along every axis. Lines are processed in parallel.
void transform_nd(std::vector<cplx>& data, int d, std::size_t g, int sign);

// Serial reference for the parallel path.
void transform_nd_serial(std::vector<cplx>& data, int d, std::size_t g, int sign);

// O(n^2) reference transform.
std::vector<cplx> naive_dft(const std::vector<cplx>& x, int sign);

} // namespace summa::fft
