#pragma once

#include <functional>
#include <limits>
#include <string>

namespace summa::special {

// Radial profile s >= 0 -> theta(s). `support_radius` is +inf when the
// profile has unbounded support; otherwise the evaluator must vanish
// beyond it.
struct RadialProfile {
    std::function<double(double)> evaluator;
    double support_radius = std::numeric_limits<double>::infinity();
    std::string description;

    double operator()(double s) const { return evaluator(s); }
};

RadialProfile bochner_riesz_profile(double alpha, double gamma = 2.0);
RadialProfile gaussian_profile(double a); // exp(-a s^2)

// Gamma function for x > 0 (Lanczos approximation, relative error <~ 1e-13).
double gamma(double x);

double beta(double x, double y);

// Bessel function of the first kind, order k > -1/2, t in [0, 1e4].
// Power series below t = 20, oscillation-resolving quadrature of the
// integral representation above.
double bessel_j(double k, double t);

// The two routes individually, for cross-checks.
double bessel_j_series(double k, double t);
double bessel_j_integral(double k, double t);

// Fourier transform (with (2pi)^-d normalization) of the radial function
// x -> theta(|x|_2) on R^d, evaluated at radius r.
double radial_fourier_transform(const RadialProfile& theta, double r, int d);

// Closed form of the transform of (1 - s^2)_+^alpha:
// (2pi)^{-d/2} 2^alpha Gamma(alpha+1) r^{-d/2-alpha} J_{d/2+alpha}(r).
double bochner_riesz_ft(double alpha, int d, double r);

// Integral of e^{i x.v} over the Euclidean ball |v|_2 <= t, as a function
// of r = |x|_2: (2pi)^{d/2} (t/r)^{d/2} J_{d/2}(r t).
double ball_fourier_integral(double t, double r, int d);

} // namespace summa::special
