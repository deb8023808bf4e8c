#include "summa/kernels.hpp"

#include "summa/fft.hpp"
#include "summa/util.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace summa::kernels {

Region region_from_q(double q) {
    if (q == 1.0) return Region::ell1;
    if (q == 2.0) return Region::ell2;
    if (std::isinf(q)) return Region::ellinf;
    throw std::invalid_argument("q must be 1, 2 or inf");
}

double region_q(Region r) {
    switch (r) {
        case Region::ell1: return 1.0;
        case Region::ell2: return 2.0;
        case Region::ellinf: return std::numeric_limits<double>::infinity();
        default: throw std::invalid_argument("rectangular region has no q");
    }
}

void KernelSpec::validate() const {
    if (dim < 1 || dim > 8) throw std::invalid_argument("KernelSpec: dim must be in [1, 8]");
    const std::size_t want = region == Region::rectangular ? static_cast<std::size_t>(dim) : 1u;
    if (n.size() != want) throw std::invalid_argument("KernelSpec: index arity mismatch");
    for (long ni : n)
        if (ni < 1) throw std::invalid_argument("KernelSpec: indices must be positive");
    if (method == Method::riesz) {
        if (!(alpha > 0.0)) throw std::invalid_argument("KernelSpec: riesz needs alpha > 0");
        if (!(gamma_exp >= 1.0)) throw std::invalid_argument("KernelSpec: riesz needs gamma >= 1");
        if (region == Region::ell2 && gamma_exp != std::floor(gamma_exp))
            throw std::invalid_argument("KernelSpec: q = 2 requires integer gamma");
    }
    if (method == Method::cesaro) {
        if (region == Region::ell2)
            throw std::invalid_argument("KernelSpec: cesaro means are defined for q in {1, inf}");
        if (alpha == std::floor(alpha) && alpha < 0.0)
            throw std::invalid_argument("KernelSpec: cesaro alpha at a pole");
    }
    if (method == Method::theta && !theta)
        throw std::invalid_argument("KernelSpec: theta method without theta function");
}

double cesaro_coefficient(long k, double alpha) {
    if (alpha == std::floor(alpha) && alpha < 0.0)
        throw std::invalid_argument("cesaro_coefficient: alpha at a negative-integer pole");
    if (k < 0) return 0.0;
    double v = 1.0;
    for (long i = 1; i <= k; ++i) v *= (alpha + static_cast<double>(i)) / static_cast<double>(i);
    return v;
}

// |k|_q for integer k; exact squared norm used separately for q = 2 membership.
static long abs_sum(std::span<const long> k) {
    long s = 0;
    for (long ki : k) s += std::abs(ki);
    return s;
}
static long abs_max(std::span<const long> k) {
    long s = 0;
    for (long ki : k) s = std::max(s, std::abs(ki));
    return s;
}
static long sq_sum(std::span<const long> k) {
    long s = 0;
    for (long ki : k) s += ki * ki;
    return s;
}

// Scalar multiplier of the method as a function of t = |k|_q / n in [0, inf);
// k_int is the integer norm needed by the Cesaro weights.
static double method_weight(const KernelSpec& spec, double t_norm, long n_int, long k_int) {
    switch (spec.method) {
        case Method::dirichlet:
            return t_norm <= 1.0 ? 1.0 : 0.0;
        case Method::fejer: {
            double b = 1.0 - t_norm;
            return b > 0.0 ? b : 0.0;
        }
        case Method::riesz: {
            if (t_norm > 1.0) return 0.0;
            double b = 1.0 - std::pow(t_norm, spec.gamma_exp);
            return b > 0.0 ? std::pow(b, spec.alpha) : 0.0;
        }
        case Method::cesaro: {
            if (k_int > n_int) return 0.0;
            return cesaro_coefficient(n_int - 1 - k_int, spec.alpha) /
                   cesaro_coefficient(n_int - 1, spec.alpha);
        }
        case Method::theta:
            return spec.theta->value1(t_norm);
    }
    return 0.0;
}

double multiplier(const KernelSpec& spec, std::span<const long> k) {
    if (spec.region == Region::rectangular) {
        if (spec.method == Method::theta && !spec.theta->tensor_product) {
            double t[8];
            for (std::size_t i = 0; i < k.size(); ++i)
                t[i] = -static_cast<double>(k[i]) / static_cast<double>(spec.n[i]);
            return spec.theta->value(std::span<const double>(t, k.size()));
        }
        double v = 1.0;
        for (std::size_t i = 0; i < k.size() && v != 0.0; ++i) {
            long a = std::abs(k[i]);
            v *= spec.method == Method::theta
                     ? spec.theta->value1(-static_cast<double>(k[i]) / static_cast<double>(spec.n[i]))
                     : method_weight(spec, static_cast<double>(a) / static_cast<double>(spec.n[i]),
                                     spec.n[i], a);
        }
        return v;
    }

    const long n = spec.radius();
    switch (spec.region) {
        case Region::ell1: {
            long a = abs_sum(k);
            return method_weight(spec, static_cast<double>(a) / static_cast<double>(n), n, a);
        }
        case Region::ellinf: {
            long a = abs_max(k);
            return method_weight(spec, static_cast<double>(a) / static_cast<double>(n), n, a);
        }
        case Region::ell2: {
            long s = sq_sum(k);
            if (spec.method == Method::dirichlet) return s <= n * n ? 1.0 : 0.0;
            if (spec.method == Method::theta)
                return spec.theta->value1(std::sqrt(static_cast<double>(s)) / static_cast<double>(n));
            if (s > n * n) return 0.0; // exact integer membership, no boundary drift
            double t = std::sqrt(static_cast<double>(s)) / static_cast<double>(n);
            return method_weight(spec, t, n, 0);
        }
        default: return 0.0;
    }
}

std::vector<std::vector<long>> ellq_ball(int d, Region region, long n) {
    std::vector<std::vector<long>> out;
    std::vector<long> k(d, -n);
    while (true) {
        bool in = false;
        switch (region) {
            case Region::ell1: in = abs_sum(k) <= n; break;
            case Region::ellinf: in = true; break;
            case Region::ell2: in = sq_sum(k) <= n * n; break;
            default: throw std::invalid_argument("ellq_ball: ellq regions only");
        }
        if (in) out.push_back(k);
        int axis = d - 1;
        for (; axis >= 0; --axis) {
            if (++k[axis] <= n) break;
            k[axis] = -n;
        }
        if (axis < 0) break;
    }
    return out;
}

long theta_truncation_radius(const ThetaFunction& theta, double n_product) {
    if (!theta.wiener_tail) return 64;
    // The lattice sum drops ~ (prod n_j) * tail(R) worth of multiplier mass,
    // so the per-cell tail target shrinks with n.
    const double tol = 1e-9 / std::max(1.0, n_product);
    for (long r = 2; r <= 100000; r = std::max(r + 1, (r * 5) / 4)) {
        if (theta.wiener_tail(static_cast<double>(r)) < tol) return r;
    }
    throw std::runtime_error("theta multiplier tail cannot reach the truncation tolerance");
}

double summability_kernel(const KernelSpec& spec, std::span<const double> x) {
    spec.validate();
    if (static_cast<int>(x.size()) != spec.dim)
        throw std::invalid_argument("summability_kernel: point arity mismatch");

    // Truncation box per axis.
    std::vector<long> lim(spec.dim);
    if (spec.method == Method::theta) {
        double nprod = 1.0;
        for (std::size_t i = 0; i < spec.n.size(); ++i) nprod *= static_cast<double>(spec.n[i]);
        long r = theta_truncation_radius(*spec.theta, nprod);
        for (int i = 0; i < spec.dim; ++i)
            lim[i] = r * (spec.region == Region::rectangular ? spec.n[i] : spec.n.front());
    } else {
        for (int i = 0; i < spec.dim; ++i)
            lim[i] = spec.region == Region::rectangular ? spec.n[i] : spec.n.front();
    }

    // Sum of m(k) cos(k.x) over the box; the sine part vanishes pairwise.
    std::vector<long> k(spec.dim);
    for (int i = 0; i < spec.dim; ++i) k[i] = -lim[i];
    double sum = 0.0;
    while (true) {
        double m = multiplier(spec, k);
        if (m != 0.0) {
            double phase = 0.0;
            for (int i = 0; i < spec.dim; ++i) phase += static_cast<double>(k[i]) * x[i];
            sum += m * std::cos(phase);
        }
        int axis = spec.dim - 1;
        for (; axis >= 0; --axis) {
            if (++k[axis] <= lim[axis]) break;
            k[axis] = -lim[axis];
        }
        if (axis < 0) break;
    }
    return sum;
}

double dirichlet_closed_1d(long n, double u) {
    double s = std::sin(u / 2.0);
    if (std::abs(s) < singularity_threshold) return static_cast<double>(2 * n + 1);
    return std::sin((static_cast<double>(n) + 0.5) * u) / s;
}

double fejer_closed_1d(long n, double u) {
    double s = std::sin(u / 2.0);
    if (std::abs(s) < singularity_threshold) return static_cast<double>(n);
    double q = std::sin(static_cast<double>(n) * u / 2.0) / s;
    return q * q / static_cast<double>(n);
}

double triangular_closed_2d(long n, double x1, double x2) {
    double c1 = std::cos(x1), c2 = std::cos(x2);
    if (std::abs(c1 - c2) < collision_threshold)
        throw std::domain_error("triangular_closed_2d: node collision");
    double np = static_cast<double>(n) + 0.5;
    return 2.0 * (std::cos(x1 / 2.0) * std::cos(np * x1) - std::cos(x2 / 2.0) * std::cos(np * x2)) /
           (c1 - c2);
}

// G_n numerator evaluated at coordinate x (d >= 2):
//   cos(x/2) (sin x)^{d-2} soc((n+1/2)x), soc = cos for even d, sin for odd.
static double gn_numerator(int d, long n, double x) {
    double np = static_cast<double>(n) + 0.5;
    double soc = d % 2 == 0 ? std::cos(np * x) : std::sin(np * x);
    return std::cos(x / 2.0) * std::pow(std::sin(x), d - 2) * soc;
}

double triangular_closed_form(long n, std::span<const double> x) {
    const int d = static_cast<int>(x.size());
    if (d == 1) return dirichlet_closed_1d(n, x[0]);

    std::vector<double> c(d);
    for (int i = 0; i < d; ++i) c[i] = std::cos(x[i]);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (std::abs(c[i] - c[j]) < collision_threshold)
                throw std::domain_error("triangular_closed_form: node collision");

    const double sign = ((d - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    double sum = 0.0;
    for (int k = 0; k < d; ++k) {
        double denom = 1.0;
        for (int j = 0; j < d; ++j)
            if (j != k) denom *= c[k] - c[j];
        sum += gn_numerator(d, n, x[k]) / denom;
    }
    return sign * 2.0 * sum;
}

double dirichlet_kernel(const KernelSpec& spec, std::span<const double> x, DirichletMode mode) {
    if (spec.method != Method::dirichlet)
        throw std::invalid_argument("dirichlet_kernel: spec.method must be dirichlet");
    spec.validate();

    if (mode == DirichletMode::lattice_sum) return summability_kernel(spec, x);

    switch (spec.region) {
        case Region::ell1:
            // The divided-difference denominators blow up when cosines of two
            // coordinates collide while the kernel itself stays smooth, so
            // near-collisions take the lattice route.
            for (int i = 0; i < spec.dim; ++i)
                for (int j = i + 1; j < spec.dim; ++j)
                    if (std::abs(std::cos(x[i]) - std::cos(x[j])) < collision_threshold)
                        return summability_kernel(spec, x);
            return triangular_closed_form(spec.radius(), x);
        case Region::ellinf: {
            double v = 1.0;
            for (double xi : x) v *= dirichlet_closed_1d(spec.radius(), xi);
            return v;
        }
        case Region::rectangular: {
            double v = 1.0;
            for (int i = 0; i < spec.dim; ++i) v *= dirichlet_closed_1d(spec.n[i], x[i]);
            return v;
        }
        case Region::ell2:
            if (spec.dim == 1) return dirichlet_closed_1d(spec.radius(), x[0]);
            throw std::invalid_argument("dirichlet_kernel: no closed form for q = 2, use lattice_sum");
    }
    return 0.0;
}

double divided_difference(std::span<const double> nodes, const std::function<double(double)>& f) {
    const std::size_t m = nodes.size();
    if (m == 0) throw std::invalid_argument("divided_difference: empty node list");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (std::abs(nodes[i] - nodes[j]) < collision_threshold)
                throw std::domain_error("divided_difference: nodes too close");
    double sum = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        double denom = 1.0;
        for (std::size_t j = 0; j < m; ++j)
            if (j != k) denom *= nodes[k] - nodes[j];
        sum += f(nodes[k]) / denom;
    }
    return sum;
}

double divided_difference_recursive(std::span<const double> nodes,
                                    const std::function<double(double)>& f) {
    if (nodes.size() == 1) return f(nodes[0]);
    double left = divided_difference_recursive(nodes.subspan(0, nodes.size() - 1), f);
    double right = divided_difference_recursive(nodes.subspan(1), f);
    return (left - right) / (nodes.front() - nodes.back());
}

// Grid evaluation: inverse DFT of the (alias-folded) multiplier array.
template <bool Parallel>
static std::vector<double> kernel_grid_impl(const KernelSpec& spec, std::size_t G) {
    spec.validate();
    if (!is_power_of_two(G)) throw std::invalid_argument("kernel_grid: G must be a power of two");
    const int d = spec.dim;
    const long half = static_cast<long>(G) / 2;

    long fold = 0; // extra lattice periods to fold for unbounded multipliers
    if (spec.method == Method::theta) {
        double nprod = 1.0;
        for (long ni : spec.n) nprod *= static_cast<double>(ni);
        long r = theta_truncation_radius(*spec.theta, nprod);
        long nmax = *std::max_element(spec.n.begin(), spec.n.end());
        fold = (r * nmax) / static_cast<long>(G) + 1;
    } else {
        long nmax = *std::max_element(spec.n.begin(), spec.n.end());
        if (2 * nmax > static_cast<long>(G)) throw std::invalid_argument("kernel_grid: index exceeds G/2 (aliasing)");
        if (2 * nmax == static_cast<long>(G)) {
            // Only admissible when the multiplier vanishes on the boundary.
            std::vector<long> edge(d, 0);
            edge[0] = nmax;
            if (multiplier(spec, edge) != 0.0)
                throw std::invalid_argument("kernel_grid: index exceeds G/2 (aliasing)");
        }
    }

    const std::size_t total = pow_size(G, d);
    std::vector<fft::cplx> b(total);
#pragma omp parallel for schedule(static) if (Parallel && total >= 4096)
    for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
        // idx decodes as DFT positions; positions >= G/2 hold negative k.
        std::vector<long> kk(d);
        std::size_t rest = static_cast<std::size_t>(idx);
        long parity = 0;
        for (int a = d - 1; a >= 0; --a) {
            long pos = static_cast<long>(rest % G);
            rest /= G;
            kk[a] = pos < half ? pos : pos - static_cast<long>(G);
            parity += kk[a];
        }
        double m;
        if (fold == 0) {
            m = multiplier(spec, kk);
        } else {
            m = 0.0;
            std::vector<long> shifted(d);
            std::vector<long> off(d, -fold);
            while (true) {
                for (int a = 0; a < d; ++a) shifted[a] = kk[a] + off[a] * static_cast<long>(G);
                m += multiplier(spec, shifted);
                int axis = d - 1;
                for (; axis >= 0; --axis) {
                    if (++off[axis] <= fold) break;
                    off[axis] = -fold;
                }
                if (axis < 0) break;
            }
        }
        b[idx] = (parity % 2 == 0 ? m : -m);
    }

    if constexpr (Parallel)
        fft::transform_nd(b, d, G, +1);
    else
        fft::transform_nd_serial(b, d, G, +1);

    std::vector<double> out(total);
    for (std::size_t i = 0; i < total; ++i) out[i] = b[i].real();
    return out;
}

std::vector<double> kernel_grid(const KernelSpec& spec, std::size_t G) {
    return kernel_grid_impl<true>(spec, G);
}
std::vector<double> kernel_grid_serial(const KernelSpec& spec, std::size_t G) {
    return kernel_grid_impl<false>(spec, G);
}

double kernel_l1_norm(const KernelSpec& spec, std::size_t G) {
    spec.validate();
    long nmax = *std::max_element(spec.n.begin(), spec.n.end());
    if (static_cast<long>(G) < 8 * nmax)
        throw std::invalid_argument("kernel_l1_norm: grid under-resolved, need G >= 8 max(n)");
    std::vector<double> vals = kernel_grid(spec, G);
    for (double& v : vals) v = std::abs(v);
    double cell = std::pow(two_pi / static_cast<double>(G), spec.dim);
    return cell * tree_sum(vals);
}

PeriodizedValue theta_kernel_periodized(const ThetaFunction& theta, std::span<const long> n,
                                        std::span<const double> x, long truncation_radius) {
    if (!theta.has_fourier())
        throw std::invalid_argument("theta_kernel_periodized: theta lacks a closed-form transform");
    if (n.size() != x.size()) throw std::invalid_argument("theta_kernel_periodized: arity mismatch");
    const int d = static_cast<int>(n.size());

    double nprod = 1.0;
    for (long ni : n) nprod *= static_cast<double>(ni);
    const double scale = std::pow(two_pi, d) * nprod;

    PeriodizedValue out;
    std::vector<long> k(d, -truncation_radius);
    while (true) {
        double term = 1.0;
        long kmax = 0;
        for (int i = 0; i < d; ++i) {
            term *= theta.profile_fourier(static_cast<double>(n[i]) * (x[i] + two_pi * static_cast<double>(k[i])));
            kmax = std::max(kmax, std::abs(k[i]));
        }
        out.value += scale * term;
        if (kmax == truncation_radius) out.tail_estimate += std::abs(scale * term);
        int axis = d - 1;
        for (; axis >= 0; --axis) {
            if (++k[axis] <= truncation_radius) break;
            k[axis] = -truncation_radius;
        }
        if (axis < 0) break;
    }
    // Outer-shell mass extrapolated for a ~|k|^-2 transform tail.
    out.tail_estimate *= static_cast<double>(truncation_radius);
    if (out.tail_estimate > 1e-6)
        throw std::runtime_error("theta_kernel_periodized: tail estimate exceeds 1e-6");
    return out;
}

double poisson_kernel_closed_1d(double t, double x) {
    double r = std::exp(-t);
    return (1.0 - r * r) / (1.0 + r * r - 2.0 * r * std::cos(x));
}

double poisson_kernel_lattice_1d(double t, double x, double tail_tol) {
    if (!(t > 0.0)) throw std::invalid_argument("poisson kernel: t > 0 required");
    double r = std::exp(-t);
    long kmax = static_cast<long>(std::ceil(std::log(tail_tol * (1.0 - r) / 2.0) / std::log(r))) + 1;
    if (kmax < 1) kmax = 1;
    double sum = 1.0;
    for (long k = 1; k <= kmax; ++k) sum += 2.0 * std::pow(r, static_cast<double>(k)) * std::cos(static_cast<double>(k) * x);
    return sum;
}

} // namespace summa::kernels
