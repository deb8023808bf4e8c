#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace summa {

// A summation function theta with theta(0) = 1. One-dimensional entries act
// per coordinate as a tensor product; radial entries evaluate through
// |t|_2 (or another norm) directly.
struct ThetaFunction {
    std::string catalog_id;
    int dim = 1; // 1 for profile entries, d for radial entries

    // 1-D profile; present for tensor-product and ellq use.
    std::function<double(double)> profile;
    // Full evaluator on R^dim. For tensor entries this is the product of
    // profiles; always present.
    std::function<double(std::span<const double>)> evaluator;
    bool tensor_product = true;

    // Support radius of the profile in each coordinate (+inf if unbounded).
    double support_radius = std::numeric_limits<double>::infinity();

    // Fourier transform of the 1-D profile under the (2pi)^-1 int f e^{-ixt} dt
    // convention, when known in closed form.
    std::function<double(double)> profile_fourier;

    // Upper bound for the 1-D Wiener-amalgam tail sum_{|k| >= R} sup_cell |theta|.
    std::function<double(double)> wiener_tail;

    double value(std::span<const double> t) const { return evaluator(t); }
    double value1(double t) const { return profile(t); }
    bool has_fourier() const { return static_cast<bool>(profile_fourier); }
};

// Catalog (all entries are even with theta(0) = 1).
ThetaFunction theta_fejer();
ThetaFunction theta_riesz(double alpha, double gamma);
ThetaFunction theta_de_la_vallee_poussin();
ThetaFunction theta_jackson_de_la_vallee_poussin();
// Even piecewise-linear interpolant through (knots[i], values[i]) with
// knots[0] = 0, values[0] = 1, values.back() = 0 and zero beyond.
ThetaFunction theta_piecewise_poly(std::vector<double> knots, std::vector<double> values);
ThetaFunction theta_rogosinski(int j = 0);
ThetaFunction theta_weierstrass(double gamma); // e^{-|t|^gamma}
ThetaFunction theta_exp_composite(double q, double gamma); // exp(1 - (1+|t|^q)^gamma)
ThetaFunction theta_picard_bessel(double alpha, double gamma); // (1+|t|^gamma)^-alpha
ThetaFunction theta_gauss_pi(); // e^{-pi t^2}, self-transform up to scaling
ThetaFunction theta_radial_riesz(int d, double alpha, double gamma); // (1-|t|_2^gamma)_+^alpha
ThetaFunction theta_radial_weierstrass(int d, double power); // e^{-|t|_2^power}

// Lookup by id string, e.g. "fejer", "riesz:1,2", "weierstrass:1",
// "rogosinski", "picard-bessel:2,2". Throws std::invalid_argument on
// unknown ids.
ThetaFunction theta_by_id(const std::string& id, int dim = 1);

} // namespace summa
