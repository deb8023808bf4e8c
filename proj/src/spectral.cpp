#include "summa/spectral.hpp"

#include "summa/fft.hpp"
#include "summa/util.hpp"

#include <cmath>
#include <stdexcept>

namespace summa::spectral {

GridFunction::GridFunction(int d, std::size_t g)
    : dim(d), points_per_dim(g), samples(pow_size(g, d)) {
    if (!is_power_of_two(g) || g < 4)
        throw std::invalid_argument("GridFunction: G must be a power of two, G >= 4");
}

double GridFunction::coordinate(std::size_t j) const {
    return -pi + two_pi * static_cast<double>(j) / static_cast<double>(points_per_dim);
}

std::vector<std::size_t> GridFunction::unflatten(std::size_t idx) const {
    std::vector<std::size_t> j(dim);
    for (int a = dim - 1; a >= 0; --a) {
        j[a] = idx % points_per_dim;
        idx /= points_per_dim;
    }
    return j;
}

std::size_t GridFunction::flatten(std::span<const std::size_t> j) const {
    std::size_t idx = 0;
    for (int a = 0; a < dim; ++a) idx = idx * points_per_dim + j[a];
    return idx;
}

double GridFunction::max_abs_imag() const {
    double m = 0.0;
    for (const cplx& v : samples) m = std::max(m, std::abs(v.imag()));
    return m;
}

std::vector<double> GridFunction::real_parts() const {
    std::vector<double> out(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) out[i] = samples[i].real();
    return out;
}

Spectrum::Spectrum(int d, std::size_t g)
    : dim(d), points_per_dim(g), coefficients(pow_size(g, d)) {
    if (!is_power_of_two(g) || g < 4)
        throw std::invalid_argument("Spectrum: G must be a power of two, G >= 4");
}

static std::size_t signed_offset(const Spectrum& s, std::span<const long> k) {
    const long h = s.half();
    std::size_t idx = 0;
    for (int a = 0; a < s.dim; ++a) {
        if (k[a] < -h || k[a] >= h) throw std::out_of_range("Spectrum: index outside [-G/2, G/2)");
        idx = idx * s.points_per_dim + static_cast<std::size_t>(k[a] + h);
    }
    return idx;
}

cplx& Spectrum::at(std::span<const long> k) { return coefficients[signed_offset(*this, k)]; }
const cplx& Spectrum::at(std::span<const long> k) const {
    return coefficients[signed_offset(*this, k)];
}

// Walk all signed indices of a spectrum in flat order. The parity of
// sum(k_i) carries the (-1)^k phase from the grid offset at -pi.
template <typename F>
static void for_each_index(int d, std::size_t g, F&& body) {
    const long h = static_cast<long>(g) / 2;
    const std::size_t total = pow_size(g, d);
#pragma omp parallel for schedule(static) if (total >= 65536)
    for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
        long k[8];
        std::size_t rest = static_cast<std::size_t>(idx);
        long parity = 0;
        for (int a = d - 1; a >= 0; --a) {
            k[a] = static_cast<long>(rest % g) - h;
            rest /= g;
            parity += k[a];
        }
        body(static_cast<std::size_t>(idx), std::span<const long>(k, d), (parity % 2 + 2) % 2);
    }
}

template <bool Parallel>
static Spectrum analyze_impl(const GridFunction& f) {
    Spectrum c(f.dim, f.points_per_dim);
    std::vector<cplx> work = f.samples;
    if constexpr (Parallel)
        fft::transform_nd(work, f.dim, f.points_per_dim, -1);
    else
        fft::transform_nd_serial(work, f.dim, f.points_per_dim, -1);

    const double scale = 1.0 / static_cast<double>(pow_size(f.points_per_dim, f.dim));
    const std::size_t g = f.points_per_dim;
    // c(k) = (-1)^{sum k} X[k mod G] / G^d
    for_each_index(f.dim, g, [&](std::size_t idx, std::span<const long> k, long parity) {
        std::size_t src = 0;
        for (int a = 0; a < f.dim; ++a)
            src = src * g + static_cast<std::size_t>((k[a] + static_cast<long>(g)) % static_cast<long>(g));
        c.coefficients[idx] = (parity ? -scale : scale) * work[src];
    });
    return c;
}

template <bool Parallel>
static GridFunction synthesize_impl(const Spectrum& c) {
    GridFunction f(c.dim, c.points_per_dim);
    const std::size_t g = c.points_per_dim;
    std::vector<cplx> work(c.coefficients.size());
    for_each_index(c.dim, g, [&](std::size_t idx, std::span<const long> k, long parity) {
        std::size_t dst = 0;
        for (int a = 0; a < c.dim; ++a)
            dst = dst * g + static_cast<std::size_t>((k[a] + static_cast<long>(g)) % static_cast<long>(g));
        work[dst] = parity ? -c.coefficients[idx] : c.coefficients[idx];
    });
    if constexpr (Parallel)
        fft::transform_nd(work, c.dim, g, +1);
    else
        fft::transform_nd_serial(work, c.dim, g, +1);
    f.samples = std::move(work);
    return f;
}

Spectrum analyze(const GridFunction& f) { return analyze_impl<true>(f); }
Spectrum analyze_serial(const GridFunction& f) { return analyze_impl<false>(f); }
GridFunction synthesize(const Spectrum& c) { return synthesize_impl<true>(c); }
GridFunction synthesize_serial(const Spectrum& c) { return synthesize_impl<false>(c); }

Spectrum mean_spectrum(const Spectrum& c, const kernels::KernelSpec& spec) {
    spec.validate();
    if (spec.dim != c.dim) throw std::invalid_argument("summability_mean: dimension mismatch");
    const long h = c.half();
    for (long ni : spec.n) {
        if (ni > h) throw std::invalid_argument("summability_mean: index >= G/2 aliases");
        if (ni == h) {
            std::vector<long> edge(c.dim, 0);
            edge[0] = ni;
            if (kernels::multiplier(spec, edge) != 0.0)
                throw std::invalid_argument("summability_mean: index >= G/2 aliases");
        }
    }
    Spectrum out(c.dim, c.points_per_dim);
    for_each_index(c.dim, c.points_per_dim, [&](std::size_t idx, std::span<const long> k, long) {
        out.coefficients[idx] = c.coefficients[idx] * kernels::multiplier(spec, k);
    });
    return out;
}

GridFunction summability_mean(const Spectrum& c, const kernels::KernelSpec& spec) {
    return synthesize(mean_spectrum(c, spec));
}

GridFunction partial_sum(const Spectrum& c, kernels::Region region, long n) {
    kernels::KernelSpec spec;
    spec.dim = c.dim;
    spec.region = region;
    spec.method = kernels::Method::dirichlet;
    spec.n = {n};
    if (n >= c.half()) throw std::invalid_argument("partial_sum: n >= G/2 aliases");
    return summability_mean(c, spec);
}

GridFunction partial_sum_rect(const Spectrum& c, std::span<const long> n) {
    kernels::KernelSpec spec;
    spec.dim = c.dim;
    spec.region = kernels::Region::rectangular;
    spec.method = kernels::Method::dirichlet;
    spec.n.assign(n.begin(), n.end());
    for (long ni : n)
        if (ni >= c.half()) throw std::invalid_argument("partial_sum: n >= G/2 aliases");
    return summability_mean(c, spec);
}

Spectrum conjugate_transform(const Spectrum& c, const ConjugateKind& kind) {
    Spectrum out(c.dim, c.points_per_dim);
    if (kind.riesz) {
        if (kind.coordinate < 0 || kind.coordinate >= c.dim)
            throw std::invalid_argument("conjugate_transform: bad coordinate");
        for_each_index(c.dim, c.points_per_dim, [&](std::size_t idx, std::span<const long> k, long) {
            double norm2 = 0.0;
            for (int a = 0; a < c.dim; ++a) norm2 += static_cast<double>(k[a]) * static_cast<double>(k[a]);
            // Multiplier -i k_i / |k|_2, zero at the origin.
            cplx m = norm2 == 0.0
                         ? cplx{0.0, 0.0}
                         : cplx{0.0, -static_cast<double>(k[kind.coordinate]) / std::sqrt(norm2)};
            out.coefficients[idx] = c.coefficients[idx] * m;
        });
        return out;
    }
    if (static_cast<int>(kind.j.size()) != c.dim)
        throw std::invalid_argument("conjugate_transform: product exponents must have dim entries");
    for_each_index(c.dim, c.points_per_dim, [&](std::size_t idx, std::span<const long> k, long) {
        cplx m{1.0, 0.0};
        for (int a = 0; a < c.dim; ++a) {
            if (kind.j[a] == 0) continue;
            double s = k[a] > 0 ? 1.0 : (k[a] < 0 ? -1.0 : 0.0);
            m *= cplx{0.0, -s}; // (-i sign k)^j with j in {0,1}
        }
        out.coefficients[idx] = c.coefficients[idx] * m;
    });
    return out;
}

GridFunction grid_convolve(const GridFunction& f, const GridFunction& g) {
    if (f.dim != g.dim || f.points_per_dim != g.points_per_dim)
        throw std::invalid_argument("grid_convolve: shape mismatch");
    Spectrum cf = analyze(f), cg = analyze(g);
    for (std::size_t i = 0; i < cf.coefficients.size(); ++i)
        cf.coefficients[i] *= cg.coefficients[i];
    return synthesize(cf);
}

GridFunction grid_convolve_direct_1d(const GridFunction& f, const GridFunction& g) {
    if (f.dim != 1 || g.dim != 1 || f.points_per_dim != g.points_per_dim)
        throw std::invalid_argument("grid_convolve_direct_1d: 1-D same-size inputs required");
    const std::size_t G = f.points_per_dim;
    GridFunction out(1, G);
    // (f*g)(x_i) ~ (2pi)^-1 (2pi/G) sum_j f(x_j) g(x_i - x_j); the difference
    // x_i - x_j lands on the grid shifted by half a period.
    for (std::size_t i = 0; i < G; ++i) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < G; ++j) {
            std::size_t diff = (i + G - j) % G;          // (i-j) mod G
            std::size_t shifted = (diff + G / 2) % G;    // index of x = x_i - x_j
            s += f.samples[j] * g.samples[shifted];
        }
        out.samples[i] = s / static_cast<double>(G);
    }
    return out;
}

double grid_l2_norm(const GridFunction& f) {
    std::vector<double> sq(f.samples.size());
    for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = std::norm(f.samples[i]);
    double cell = std::pow(two_pi / static_cast<double>(f.points_per_dim), f.dim);
    return std::sqrt(cell * tree_sum(sq));
}

} // namespace summa::spectral
