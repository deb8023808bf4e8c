#pragma once

#include "summa/theta.hpp"

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace summa::kernels {

enum class Region { ell1, ell2, ellinf, rectangular };
enum class Method { dirichlet, fejer, riesz, cesaro, theta };

Region region_from_q(double q);
double region_q(Region r); // 1, 2 or inf for ellq regions

// Full description of a summability kernel. For ellq regions `n` holds a
// single radius; for the rectangular region one entry per coordinate.
struct KernelSpec {
    int dim = 1;
    Region region = Region::ellinf;
    Method method = Method::fejer;
    double alpha = 1.0;
    double gamma_exp = 1.0;
    std::vector<long> n{1};
    std::shared_ptr<const ThetaFunction> theta;

    long radius() const { return n.front(); }
    // Throws std::invalid_argument when the invariants fail:
    // riesz needs alpha > 0 and gamma >= 1 (integer gamma when q = 2),
    // cesaro is defined for q in {1, inf} and rectangles, positive n.
    void validate() const;
};

// Frequency-domain multiplier m(k) of the kernel.
double multiplier(const KernelSpec& spec, std::span<const long> k);

// Lattice points of the closed ball |k|_q <= n (q = 2 membership decided in
// exact integer arithmetic). Deterministic enumeration order.
std::vector<std::vector<long>> ellq_ball(int d, Region region, long n);

// K(x) = sum_k m(k) e^{ik.x} as a direct lattice sum (real part; the
// imaginary part cancels by symmetry). Unbounded theta multipliers are
// truncated via the Wiener tail bound.
double summability_kernel(const KernelSpec& spec, std::span<const double> x);

enum class DirichletMode { closed_form, lattice_sum };

// Dirichlet kernel via the requested route. Closed forms exist for d = 1,
// the triangular (q=1) divided-difference form, products for q = inf and
// rectangles; q = 2 supports lattice_sum only.
double dirichlet_kernel(const KernelSpec& spec, std::span<const double> x, DirichletMode mode);

// sin((n+1/2)u)/sin(u/2) with the removable singularity branch.
double dirichlet_closed_1d(long n, double u);
// (1/n)(sin(nu/2)/sin(u/2))^2. The variant with u/2 in the denominator
// fails the lattice-sum cross-check and is not used.
double fejer_closed_1d(long n, double u);
// Explicit d=2 triangular form
// 2 [cos(x1/2)cos((n+1/2)x1) - cos(x2/2)cos((n+1/2)x2)] / (cos x1 - cos x2).
double triangular_closed_2d(long n, double x1, double x2);
// Generic divided-difference route for any d >= 2; throws on node collision
// (|cos x_i - cos x_j| below `collision_threshold`).
double triangular_closed_form(long n, std::span<const double> x);

inline constexpr double collision_threshold = 1e-6;
inline constexpr double singularity_threshold = 1e-9;

// Divided difference [x1,...,xn]f by the explicit sum over nodes; the
// recursive variant implements the inductive definition.
double divided_difference(std::span<const double> nodes, const std::function<double(double)>& f);
double divided_difference_recursive(std::span<const double> nodes, const std::function<double(double)>& f);

// A_k^alpha = (alpha+1)...(alpha+k)/k!; A_{-1}^alpha = 0.
double cesaro_coefficient(long k, double alpha);

// Kernel values on the uniform G^d grid x_j = -pi + 2pi j / G (FFT route;
// exact for band-limited multipliers, alias-folded for theta tails).
std::vector<double> kernel_grid(const KernelSpec& spec, std::size_t G);
std::vector<double> kernel_grid_serial(const KernelSpec& spec, std::size_t G);

// Trapezoidal integral of |K| over T^d. Requires G >= 8 max(n).
double kernel_l1_norm(const KernelSpec& spec, std::size_t G);

struct PeriodizedValue {
    double value = 0.0;
    double tail_estimate = 0.0;
};

// (2pi)^d (prod n_j) sum_{|k|_inf <= R} theta_hat(n_1(x_1+2k_1 pi), ...).
// Throws when the outermost-shell tail estimate exceeds 1e-6.
PeriodizedValue theta_kernel_periodized(const ThetaFunction& theta, std::span<const long> n,
                                        std::span<const double> x, long truncation_radius);

// One-dimensional periodic Poisson kernel P_t.
double poisson_kernel_closed_1d(double t, double x);
double poisson_kernel_lattice_1d(double t, double x, double tail_tol = 1e-10);

// Smallest lattice truncation radius (in units of n) for a theta multiplier.
long theta_truncation_radius(const ThetaFunction& theta, double n_product);

} // namespace summa::kernels
