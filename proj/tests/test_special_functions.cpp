#include "summa/special_functions.hpp"

#include "summa/quadrature.hpp"
#include "summa/util.hpp"

#include "doctest.h"

#include <cmath>

using namespace summa;
using namespace summa::special;

TEST_CASE("gamma anchors and recursion") {
    CHECK(special::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(special::gamma(0.5) == doctest::Approx(std::sqrt(pi)).epsilon(1e-13));
    CHECK(special::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    for (double x : {0.5, 1.5, 2.5, 4.5})
        CHECK(special::gamma(x + 1.0) / special::gamma(x) == doctest::Approx(x).epsilon(1e-10));
    CHECK_THROWS_AS(special::gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(special::gamma(-2.5), std::domain_error);
}

TEST_CASE("beta against gamma relation and quadrature") {
    CHECK(beta(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(beta(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-12));

    // Gamma(x+y) B(x,y) = Gamma(x) Gamma(y)
    for (auto [x, y] : {std::pair{0.7, 1.9}, {2.5, 3.5}, {0.5, 4.0}}) {
        CHECK(special::gamma(x + y) * beta(x, y) ==
              doctest::Approx(special::gamma(x) * special::gamma(y)).epsilon(1e-10));
    }

    // B(1/2,1/2) = int_0^1 s^{-1/2}(1-s)^{-1/2} ds; with s = sin^2(phi) the
    // integrand becomes the constant 2 on (0, pi/2).
    double oracle = quad::integrate([](double) { return 2.0; }, 0.0, pi / 2.0);
    CHECK(beta(0.5, 0.5) == doctest::Approx(oracle).epsilon(1e-10));
    CHECK(beta(0.5, 0.5) == doctest::Approx(pi).epsilon(1e-10));
}

TEST_CASE("bessel_j anchors") {
    CHECK(bessel_j(1.0, 0.0) == 0.0);
    CHECK(bessel_j(0.0, 0.0) == 1.0);
    // J_{1/2}(t) = sqrt(2/(pi t)) sin t; at t = pi/2 this is 2/pi.
    CHECK(bessel_j(0.5, pi / 2.0) == doctest::Approx(2.0 / pi).epsilon(1e-12));
    CHECK_THROWS_AS(bessel_j(-0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_j(0.0, 2e4), std::overflow_error);
}

TEST_CASE("bessel series agrees with integral representation") {
    for (double k : {0.0, 0.5, 1.0, 2.0, 3.5}) {
        for (double t : {0.1, 1.0, 5.0, 12.0, 18.0, 25.0}) {
            CAPTURE(k);
            CAPTURE(t);
            CHECK(bessel_j_series(k, t) ==
                  doctest::Approx(bessel_j_integral(k, t)).epsilon(1e-9));
        }
    }
    // Both routes agree at the switch point t = 20.
    for (double k : {0.0, 1.0, 1.5}) {
        CHECK(bessel_j_series(k, 20.0) ==
              doctest::Approx(bessel_j_integral(k, 20.0)).epsilon(1e-10));
    }
}

TEST_CASE("bessel_j against libstdc++") {
    for (double k : {0.0, 0.5, 1.0, 1.5, 2.0, 4.0}) {
        for (double t : {0.25, 1.0, 7.0, 20.0, 50.0, 100.0, 400.0}) {
            CAPTURE(k);
            CAPTURE(t);
            // Larger t needs slack: quadrature roundoff is amplified by the
            // (t/2)^k prefactor.
            double tol = t <= 100.0 ? 1e-8 : 1e-6;
            CHECK(bessel_j(k, t) ==
                  doctest::Approx(std::cyl_bessel_j(k, t)).epsilon(tol));
        }
    }
}

TEST_CASE("bessel derivative identity") {
    // J_k'(t) = k/t J_k(t) - J_{k+1}(t), via central differences.
    const double h = 1e-5;
    for (double k : {0.0, 0.5, 1.0, 1.5}) {
        for (double t : {0.5, 1.0, 5.0, 20.0}) {
            double lhs = (bessel_j(k, t + h) - bessel_j(k, t - h)) / (2.0 * h);
            double rhs = k / t * bessel_j(k, t) - bessel_j(k + 1.0, t);
            CAPTURE(k);
            CAPTURE(t);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
        }
    }
}

TEST_CASE("sonine integral identity") {
    // J_{k+l+1}(t) = t^{l+1} / (2^l Gamma(l+1)) int_0^1 J_k(ts) s^{k+1} (1-s^2)^l ds
    for (double k : {0.0, 1.0}) {
        for (double l : {0.0, 1.0}) {
            for (double t : {1.0, 5.0}) {
                auto integrand = [&](double s) {
                    return bessel_j(k, t * s) * std::pow(s, k + 1.0) *
                           std::pow(1.0 - s * s, l);
                };
                double rhs = std::pow(t, l + 1.0) /
                             (std::pow(2.0, l) * special::gamma(l + 1.0)) *
                             quad::integrate(integrand, 0.0, 1.0);
                CAPTURE(k);
                CAPTURE(l);
                CAPTURE(t);
                CHECK(bessel_j(k + l + 1.0, t) == doctest::Approx(rhs).epsilon(1e-7));
            }
        }
    }
}

TEST_CASE("bessel decay bounds stay bounded") {
    // |J_k(t)| <= C_k min(t^k, t^{-1/2}); the scaled sup over a log grid in
    // (0, 100] is recorded as an empirical constant.
    for (double k : {0.0, 0.5, 1.0, 1.5}) {
        double sup_scaled = 0.0;
        for (int i = 0; i <= 400; ++i) {
            double t = 100.0 * std::pow(10.0, -3.0 * (400 - i) / 400.0);
            double j = std::abs(bessel_j(k, t));
            double scaled = j / std::min(std::pow(t, k), std::pow(t, -0.5));
            sup_scaled = std::max(sup_scaled, scaled);
        }
        CAPTURE(k);
        CHECK(std::isfinite(sup_scaled));
        CHECK(sup_scaled < 10.0);
        MESSAGE("empirical C_k for k=", k, ": ", sup_scaled);
    }
}

TEST_CASE("radial fourier transform") {
    SUBCASE("gaussian at r=0, d=2") {
        // Separable oracle: (2pi)^{-2} (int e^{-pi s^2} ds)^2 = (2pi)^{-2}.
        auto p = gaussian_profile(pi);
        CHECK(radial_fourier_transform(p, 0.0, 2) ==
              doctest::Approx(1.0 / (4.0 * pi * pi)).epsilon(1e-10));
        CHECK(radial_fourier_transform(p, 0.0, 2) ==
              doctest::Approx(0.0253302959105844).epsilon(1e-10));
    }
    SUBCASE("zero profile") {
        RadialProfile z{[](double) { return 0.0; }, 3.0, "zero"};
        for (double r : {0.0, 0.5, 2.0})
            CHECK(radial_fourier_transform(z, r, 2) == doctest::Approx(0.0));
    }
    SUBCASE("matches bochner_riesz_ft closed form") {
        auto p = bochner_riesz_profile(1.0);
        for (double r : {0.5, 1.0, 2.0, 5.0}) {
            CAPTURE(r);
            CHECK(radial_fourier_transform(p, r, 2) ==
                  doctest::Approx(bochner_riesz_ft(1.0, 2, r)).epsilon(1e-6));
        }
    }
    SUBCASE("gaussian at r>0 against the self-transform") {
        // theta(s) = e^{-pi s^2} on R^2 transforms to (2pi)^{-2} e^{-r^2/(4pi)}.
        auto p = gaussian_profile(pi);
        for (double r : {0.5, 1.0, 3.0}) {
            double expected = std::pow(two_pi, -2.0) * std::exp(-r * r / (4.0 * pi));
            CHECK(radial_fourier_transform(p, r, 2) ==
                  doctest::Approx(expected).epsilon(1e-9));
        }
    }
}

TEST_CASE("bochner-riesz transform decay and small-r behavior") {
    CHECK_THROWS_AS(bochner_riesz_ft(1.0, 2, 0.0), std::domain_error);

    double v = bochner_riesz_ft(1.0, 2, 1e-3);
    CHECK(std::isfinite(v));
    CHECK(v > 0.0);

    // |theta_hat(r)| r^{d/2+alpha+1/2} bounded over r in [1, 100].
    double sup_scaled = 0.0;
    for (int i = 0; i <= 200; ++i) {
        double r = 1.0 + 99.0 * i / 200.0;
        sup_scaled = std::max(sup_scaled,
                              std::abs(bochner_riesz_ft(1.0, 2, r)) * std::pow(r, 2.5));
    }
    CHECK(std::isfinite(sup_scaled));
    CHECK(sup_scaled < 10.0);
}

TEST_CASE("ball fourier integral reduces to volume at r=0 and is consistent") {
    CHECK(ball_fourier_integral(1.0, 0.0, 2) == doctest::Approx(pi).epsilon(1e-12));
    // Against the radial transform of the indicator profile (dual route via
    // the quadrature of the transform theorem).
    RadialProfile ind{[](double s) { return s <= 1.0 ? 1.0 : 0.0; }, 1.0, "indicator"};
    for (double r : {0.7, 1.3, 4.0}) {
        double via_quadrature = std::pow(two_pi, 2) * radial_fourier_transform(ind, r, 2);
        CHECK(ball_fourier_integral(1.0, r, 2) ==
              doctest::Approx(via_quadrature).epsilon(1e-6));
    }
}
