#pragma once

#include "summa/spectral.hpp"

#include <functional>
#include <vector>

namespace summa::maximal {

using spectral::GridFunction;
using spectral::Spectrum;

struct Variant {
    enum class Kind { cube, cone, strong } kind = Kind::cube;
    double tau = 1.0;

    static Variant cube() { return {Kind::cube, 1.0}; }
    static Variant cone(double tau) { return {Kind::cone, tau}; }
    static Variant strong() { return {Kind::strong, 1.0}; }
};

// Discrete Hardy-Littlewood maximal function: at every grid point the
// maximum of the averages of |f| over grid-aligned periodic rectangles
// containing it, with side lengths from the dyadic-plus-odd ladder
// {1,2,3,4,6,8,...,G/2} (cube: equal sides; cone: side ratios within
// [1/tau, tau]; strong: all combinations). Sliding-window maxima give
// O(G^d) work per admissible shape.
GridFunction maximal_function(const GridFunction& f, const Variant& v);

// Literal per-point enumeration of rectangles and their averages.
GridFunction maximal_function_brute(const GridFunction& f, const Variant& v);

// Families of mean indices for restricted/unrestricted maximal means. All
// kinds draw coordinates from the dyadic-plus-odd ladder up to N.
struct IndexSet {
    std::vector<std::vector<long>> members;
    std::vector<double> omega_lower, omega_upper; // cone-like exponents, per axis

    static IndexSet single(std::vector<long> n);
    static IndexSet box(int dim, long N);
    static IndexSet cone(int dim, double tau, long N);
    // gamma_j strictly increasing with gamma(2x)/gamma(x) in (1, inf);
    // the measured dyadic ratio bounds are recorded as omega exponents.
    static IndexSet cone_like(const std::vector<std::function<double(double)>>& gammas,
                              const std::vector<double>& taus, long N);

    const std::vector<std::vector<long>>& enumerate() const { return members; }
};

// sup over n in the set of |sigma_n f| (absolute = false) or of
// |f| * |K_n| (absolute = true; 1-D kernels only).
GridFunction maximal_mean(const Spectrum& c, const kernels::KernelSpec& family,
                          const IndexSet& indices, bool absolute = false);

// max_t |f * P_t| over a grid of Poisson times.
GridFunction poisson_maximal(const GridFunction& f, std::span<const double> t_grid);
std::vector<double> default_poisson_times(); // 32 geometric points in [1e-3, 4]

} // namespace summa::maximal
