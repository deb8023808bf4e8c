#include "summa/test_functions.hpp"

#include "summa/util.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace summa::testfn {

spectral::GridFunction TestFunction::sample(std::size_t G) const {
    spectral::GridFunction f(dim, G);
    std::vector<double> x(dim);
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto j = f.unflatten(i);
        for (int a = 0; a < dim; ++a) x[a] = f.coordinate(j[a]);
        f.samples[i] = eval(x);
    }
    return f;
}

static TestFunction make_trig(int dim, std::uint64_t seed, long band) {
    TestFunction tf;
    tf.id = "trig";
    tf.dim = dim;
    tf.band = band;

    // Real-valued polynomial with nonnegative coefficients: c(0) plus
    // conjugate pairs with c(k) = c(-k) >= 0. Positivity puts the sup of
    // any multiplier deficit at x = 0, which the convergence suite uses.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    std::vector<long> k(dim, -band);
    while (true) {
        // canonical representative: zero, or first nonzero coordinate positive
        long lead = 0;
        for (long ki : k)
            if (ki != 0) {
                lead = ki;
                break;
            }
        if (lead >= 0) {
            double c = unif(rng) / std::pow(2.0, std::abs(k[0]) + (dim > 1 ? std::abs(k[1]) : 0L));
            bool zero = true;
            for (long ki : k) zero = zero && ki == 0;
            tf.coefficients.push_back({k, {c, 0.0}});
            if (!zero) {
                std::vector<long> neg(k);
                for (long& ki : neg) ki = -ki;
                tf.coefficients.push_back({neg, {c, 0.0}});
            }
        }
        int a = dim - 1;
        for (; a >= 0; --a) {
            if (++k[a] <= band) break;
            k[a] = -band;
        }
        if (a < 0) break;
    }

    auto coeffs = tf.coefficients;
    int d = dim;
    tf.eval = [coeffs, d](std::span<const double> x) {
        double s = 0.0;
        for (const auto& [kk, c] : coeffs) {
            double phase = 0.0;
            for (int a = 0; a < d; ++a) phase += static_cast<double>(kk[a]) * x[a];
            s += c.real() * std::cos(phase) - c.imag() * std::sin(phase);
        }
        return s;
    };

    std::uniform_real_distribution<double> pt(-3.0, 3.0);
    for (int i = 0; i < 20; ++i) {
        std::vector<double> p(dim);
        for (double& v : p) v = pt(rng);
        tf.continuity_points.push_back(std::move(p));
    }
    return tf;
}

TestFunction make_test_function(const std::string& id, int dim, std::uint64_t seed, long band) {
    TestFunction tf;
    tf.id = id;
    tf.dim = dim;

    if (id == "constant") {
        tf.eval = [](std::span<const double>) { return 1.0; };
        tf.continuity_points = {std::vector<double>(dim, 0.4), std::vector<double>(dim, -1.7)};
        return tf;
    }
    if (id == "trig") return make_trig(dim, seed, band);
    if (id == "bump") {
        tf.eval = [](std::span<const double> x) {
            double v = 1.0;
            for (double xi : x) v *= std::exp(std::cos(xi) - 1.0);
            return v;
        };
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> pt(-3.0, 3.0);
        for (int i = 0; i < 100; ++i) {
            std::vector<double> p(dim);
            for (double& v : p) v = pt(rng);
            tf.continuity_points.push_back(std::move(p));
        }
        return tf;
    }
    if (id == "jump") {
        if (dim != 1) throw std::invalid_argument("test function 'jump' is one-dimensional");
        tf.eval = [](std::span<const double> x) { return x[0] >= 0.0 && x[0] < pi ? 1.0 : 0.0; };
        tf.jumps.push_back({{0.0}, 0.5});
        tf.jumps.push_back({{-pi}, 0.5});
        for (double p : {0.5, 1.0, 2.0, 2.6, -0.5, -1.3, -2.4})
            tf.continuity_points.push_back({p});
        return tf;
    }
    if (id == "corner") {
        tf.eval = [](std::span<const double> x) {
            double s = 0.0;
            for (double xi : x) s += xi * xi;
            return std::sqrt(s);
        };
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> pt(-2.5, 2.5);
        for (int i = 0; i < 50; ++i) {
            std::vector<double> p(dim);
            for (double& v : p) v = pt(rng);
            tf.continuity_points.push_back(std::move(p));
        }
        return tf;
    }
    if (id == "cone-peak") {
        tf.eval = [](std::span<const double> x) {
            double s = 0.0;
            for (double xi : x) s += xi * xi;
            return std::max(0.0, 1.0 - std::sqrt(s) / 1.5);
        };
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> pt(-2.0, 2.0);
        for (int i = 0; i < 50; ++i) {
            std::vector<double> p(dim);
            for (double& v : p) v = pt(rng);
            tf.continuity_points.push_back(std::move(p));
        }
        return tf;
    }
    throw std::invalid_argument("unknown test function: " + id);
}

} // namespace summa::testfn
