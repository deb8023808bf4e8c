#include "summa/theta.hpp"

#include "summa/util.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace summa {

static void attach_tensor_evaluator(ThetaFunction& th) {
    auto prof = th.profile;
    th.evaluator = [prof](std::span<const double> t) {
        double v = 1.0;
        for (double ti : t) v *= prof(ti);
        return v;
    };
    th.tensor_product = true;
}

// Tail of sum_{k >= R} e^{-c k^p} for p >= 1, using k^p >= k R^{p-1}.
static double exp_tail(double R, double c, double p) {
    if (R <= 1.0) return std::numeric_limits<double>::infinity();
    double rate = c * std::pow(R, p - 1.0);
    return 2.0 * std::exp(-c * std::pow(R, p)) / (1.0 - std::exp(-rate));
}

static std::function<double(double)> compact_tail(double support) {
    return [support](double R) { return R > support ? 0.0 : std::numeric_limits<double>::infinity(); };
}

ThetaFunction theta_fejer() {
    ThetaFunction th;
    th.catalog_id = "fejer";
    th.profile = [](double t) { return std::max(0.0, 1.0 - std::abs(t)); };
    th.support_radius = 1.0;
    th.profile_fourier = [](double x) {
        if (std::abs(x) < 1e-8) {
            // (2pi)^-1 (sin(x/2)/(x/2))^2 ~ (2pi)^-1 (1 - x^2/12)
            return (1.0 - x * x / 12.0) / two_pi;
        }
        double s = std::sin(x / 2.0) / (x / 2.0);
        return s * s / two_pi;
    };
    th.wiener_tail = compact_tail(1.0);
    attach_tensor_evaluator(th);
    return th;
}

ThetaFunction theta_riesz(double alpha, double gamma) {
    if (!(alpha > 0.0) || !(gamma >= 1.0))
        throw std::invalid_argument("theta_riesz: need alpha > 0, gamma >= 1");
    ThetaFunction th;
    th.catalog_id = "riesz";
    th.profile = [alpha, gamma](double t) {
        double b = 1.0 - std::pow(std::abs(t), gamma);
        return b > 0.0 ? std::pow(b, alpha) : 0.0;
    };
    th.support_radius = 1.0;
    th.wiener_tail = compact_tail(1.0);
    attach_tensor_evaluator(th);
    return th;
}

ThetaFunction theta_de_la_vallee_poussin() {
    ThetaFunction th;
    th.catalog_id = "de-la-vallee-poussin";
    th.profile = [](double t) {
        double a = std::abs(t);
        if (a <= 0.5) return 1.0;
        if (a <= 1.0) return 2.0 - 2.0 * a;
        return 0.0;
    };
    th.support_radius = 1.0;
    th.wiener_tail = compact_tail(1.0);
    attach_tensor_evaluator(th);
    return th;
}

ThetaFunction theta_jackson_de_la_vallee_poussin() {
    ThetaFunction th;
    th.catalog_id = "jackson-dlvp";
    th.profile = [](double t) {
        double a = std::abs(t);
        if (a <= 1.0) return 1.0 - 1.5 * a * a + 0.75 * a * a * a;
        if (a <= 2.0) return 0.25 * std::pow(2.0 - a, 3.0);
        return 0.0;
    };
    th.support_radius = 2.0;
    th.wiener_tail = compact_tail(2.0);
    attach_tensor_evaluator(th);
    return th;
}

ThetaFunction theta_piecewise_poly(std::vector<double> knots, std::vector<double> values) {
    if (knots.size() != values.size() || knots.size() < 2 || knots.front() != 0.0 ||
        values.front() != 1.0 || values.back() != 0.0)
        throw std::invalid_argument("theta_piecewise_poly: need knots from 0, values from 1 to 0");
    ThetaFunction th;
    th.catalog_id = "piecewise-poly";
    double support = knots.back();
    th.profile = [knots = std::move(knots), values = std::move(values)](double t) {
        double a = std::abs(t);
        if (a >= knots.back()) return 0.0;
        for (std::size_t i = 1; i < knots.size(); ++i) {
            if (a <= knots[i]) {
                double w = (a - knots[i - 1]) / (knots[i] - knots[i - 1]);
                return values[i - 1] + w * (values[i] - values[i - 1]);
            }
        }
        return 0.0;
    };
    th.support_radius = support;
    th.wiener_tail = compact_tail(support);
    attach_tensor_evaluator(th);
    return th;
}

ThetaFunction theta_rogosinski(int j) {
    if (j < 0) throw std::invalid_argument("theta_rogosinski: j >= 0");
    ThetaFunction th;
    th.catalog_id = "rogosinski";
    double support = 1.0 + 2.0 * j;
    th.profile = [support](double t) {
        double a = std::abs(t);
        return a <= support ? std::cos(pi * t / 2.0) : 0.0;
    };
    th.support_radius = support;
    th.wiener_tail = compact_tail(support);
    attach_tensor_evaluator(th);
    return th;
}

ThetaFunction theta_weierstrass(double gamma) {
    if (!(gamma >= 1.0)) throw std::invalid_argument("theta_weierstrass: gamma >= 1");
    ThetaFunction th;
    th.catalog_id = "weierstrass";
    th.profile = [gamma](double t) { return std::exp(-std::pow(std::abs(t), gamma)); };
    if (gamma == 1.0) {
        // Abel means; Cauchy/Poisson transform.
        th.profile_fourier = [](double x) { return 1.0 / (pi * (1.0 + x * x)); };
    } else if (gamma == 2.0) {
        th.profile_fourier = [](double x) {
            return std::exp(-x * x / 4.0) / (2.0 * std::sqrt(pi));
        };
    }
    th.wiener_tail = [gamma](double R) { return exp_tail(R, 1.0, gamma); };
    attach_tensor_evaluator(th);
    return th;
}

ThetaFunction theta_exp_composite(double q, double gamma) {
    if (!(q >= 1.0) || !(gamma > 0.0))
        throw std::invalid_argument("theta_exp_composite: need q >= 1, gamma > 0");
    ThetaFunction th;
    th.catalog_id = "exp-composite";
    // Normalized so that theta(0) = 1.
    th.profile = [q, gamma](double t) {
        return std::exp(1.0 - std::pow(1.0 + std::pow(std::abs(t), q), gamma));
    };
    th.wiener_tail = [q, gamma](double R) {
        return std::exp(1.0) * exp_tail(R, 1.0, q * gamma);
    };
    attach_tensor_evaluator(th);
    return th;
}

ThetaFunction theta_picard_bessel(double alpha, double gamma) {
    if (!(alpha > 0.0) || !(gamma >= 1.0) || !(alpha * gamma > 1.0))
        throw std::invalid_argument("theta_picard_bessel: need alpha*gamma > d = 1");
    ThetaFunction th;
    th.catalog_id = "picard-bessel";
    th.profile = [alpha, gamma](double t) {
        return std::pow(1.0 + std::pow(std::abs(t), gamma), -alpha);
    };
    th.wiener_tail = [alpha, gamma](double R) {
        // sum_{k >= R} (1+k^gamma)^-alpha <= int_{R-1}^inf t^{-alpha gamma} dt
        double ag = alpha * gamma;
        if (R <= 2.0) return std::numeric_limits<double>::infinity();
        return 2.0 * std::pow(R - 1.0, 1.0 - ag) / (ag - 1.0);
    };
    attach_tensor_evaluator(th);
    return th;
}

ThetaFunction theta_gauss_pi() {
    ThetaFunction th;
    th.catalog_id = "gauss-pi";
    th.profile = [](double t) { return std::exp(-pi * t * t); };
    th.profile_fourier = [](double x) { return std::exp(-x * x / (4.0 * pi)) / two_pi; };
    th.wiener_tail = [](double R) { return exp_tail(R, pi, 2.0); };
    attach_tensor_evaluator(th);
    return th;
}

static double norm2(std::span<const double> t) {
    double s = 0.0;
    for (double ti : t) s += ti * ti;
    return std::sqrt(s);
}

ThetaFunction theta_radial_riesz(int d, double alpha, double gamma) {
    ThetaFunction th;
    th.catalog_id = "radial-riesz";
    th.dim = d;
    th.tensor_product = false;
    th.profile = [alpha, gamma](double s) {
        double b = 1.0 - std::pow(std::abs(s), gamma);
        return b > 0.0 ? std::pow(b, alpha) : 0.0;
    };
    auto prof = th.profile;
    th.evaluator = [prof](std::span<const double> t) { return prof(norm2(t)); };
    th.support_radius = 1.0;
    th.wiener_tail = compact_tail(1.0);
    return th;
}

ThetaFunction theta_radial_weierstrass(int d, double power) {
    ThetaFunction th;
    th.catalog_id = "radial-weierstrass";
    th.dim = d;
    th.tensor_product = false;
    th.profile = [power](double s) { return std::exp(-std::pow(std::abs(s), power)); };
    auto prof = th.profile;
    th.evaluator = [prof](std::span<const double> t) { return prof(norm2(t)); };
    th.wiener_tail = [power](double R) { return exp_tail(R, 1.0, power); };
    return th;
}

ThetaFunction theta_by_id(const std::string& id, int dim) {
    auto colon = id.find(':');
    std::string name = id.substr(0, colon);
    std::vector<double> args;
    if (colon != std::string::npos) {
        std::stringstream ss(id.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) args.push_back(std::stod(tok));
    }
    auto arg = [&](std::size_t i, double dflt) { return i < args.size() ? args[i] : dflt; };

    if (name == "fejer") return theta_fejer();
    if (name == "riesz") return theta_riesz(arg(0, 1.0), arg(1, 1.0));
    if (name == "de-la-vallee-poussin" || name == "dlvp") return theta_de_la_vallee_poussin();
    if (name == "jackson-dlvp") return theta_jackson_de_la_vallee_poussin();
    if (name == "rogosinski") return theta_rogosinski(static_cast<int>(arg(0, 0.0)));
    if (name == "piecewise-poly") return theta_piecewise_poly({0.0, 0.5, 1.0}, {1.0, 0.6, 0.0});
    if (name == "weierstrass") return theta_weierstrass(arg(0, 2.0));
    if (name == "exp-composite") return theta_exp_composite(arg(0, 2.0), arg(1, 1.0));
    if (name == "picard-bessel") return theta_picard_bessel(arg(0, 2.0), arg(1, 2.0));
    if (name == "gauss-pi") return theta_gauss_pi();
    if (name == "radial-riesz") return theta_radial_riesz(dim, arg(0, 1.0), arg(1, 2.0));
    if (name == "radial-weierstrass") return theta_radial_weierstrass(dim, arg(0, 2.0));
    throw std::invalid_argument("unknown theta id: " + id);
}

} // namespace summa
