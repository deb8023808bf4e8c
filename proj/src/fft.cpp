#include "summa/fft.hpp"

#include "summa/util.hpp"

#include <map>
#include <stdexcept>

namespace summa::fft {

static std::vector<cplx> make_twiddles(std::size_t n, int sign) {
    std::vector<cplx> w(n / 2);
    for (std::size_t i = 0; i < n / 2; ++i) {
        double ang = sign * two_pi * static_cast<double>(i) / static_cast<double>(n);
        w[i] = {std::cos(ang), std::sin(ang)};
    }
    return w;
}

// Batched transforms hit the same length over and over (one call per grid
// line), so twiddles are cached per thread.
static const std::vector<cplx>& twiddles(std::size_t n, int sign) {
    thread_local std::map<std::pair<std::size_t, int>, std::vector<cplx>> cache;
    auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make_twiddles(n, sign)).first;
    return it->second;
}

void transform(cplx* data, std::size_t n, int sign) {
    if (!is_power_of_two(n)) throw std::invalid_argument("fft: length must be a power of two");
    if (n == 1) return;

    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    const auto& w = twiddles(n, sign);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx u = data[i + k];
                cplx v = data[i + k + len / 2] * w[k * step];
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
            }
        }
    }
}

// Apply the 1-D transform along axis `axis` of a d-dim cube of extent g.
template <bool Parallel>
static void transform_axis(std::vector<cplx>& data, int d, std::size_t g, int axis, int sign) {
    const std::size_t total = data.size();
    std::size_t stride = 1;
    for (int a = d - 1; a > axis; --a) stride *= g;
    const std::size_t lines = total / g;

#pragma omp parallel if (Parallel && total >= 4096)
    {
        std::vector<cplx> line(g);
#pragma omp for schedule(static)
        for (long long li = 0; li < static_cast<long long>(lines); ++li) {
            // Decompose the line index into (outer, inner) around the axis.
            const std::size_t inner = static_cast<std::size_t>(li) % stride;
            const std::size_t outer = static_cast<std::size_t>(li) / stride;
            const std::size_t base = outer * stride * g + inner;
            for (std::size_t j = 0; j < g; ++j) line[j] = data[base + j * stride];
            transform(line.data(), g, sign);
            for (std::size_t j = 0; j < g; ++j) data[base + j * stride] = line[j];
        }
    }
}

void transform_nd(std::vector<cplx>& data, int d, std::size_t g, int sign) {
    if (data.size() != pow_size(g, d)) throw std::invalid_argument("fft: size mismatch");
    for (int axis = 0; axis < d; ++axis) transform_axis<true>(data, d, g, axis, sign);
}

void transform_nd_serial(std::vector<cplx>& data, int d, std::size_t g, int sign) {
    if (data.size() != pow_size(g, d)) throw std::invalid_argument("fft: size mismatch");
    for (int axis = 0; axis < d; ++axis) transform_axis<false>(data, d, g, axis, sign);
}

std::vector<cplx> naive_dft(const std::vector<cplx>& x, int sign) {
    const std::size_t n = x.size();
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double ang = sign * two_pi * static_cast<double>(j * k % n) / static_cast<double>(n);
            s += x[j] * cplx{std::cos(ang), std::sin(ang)};
        }
        out[k] = s;
    }
    return out;
}

} // namespace summa::fft
