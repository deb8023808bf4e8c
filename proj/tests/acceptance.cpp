// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Run directly or through ctest (-R acceptance).

#include "summa/harness.hpp"
#include "summa/norms.hpp"
#include "summa/quadrature.hpp"
#include "summa/special_functions.hpp"
#include "summa/util.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace summa;
using kernels::KernelSpec;
using kernels::Method;
using kernels::Region;
using spectral::GridFunction;

namespace {

int failures = 0;

void report(int id, const char* label, bool ok, const std::string& detail) {
    std::printf("[%s] %2d. %s: %s\n", ok ? "PASS" : "FAIL", id, label, detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

void criterion_1_kernel_identities() {
    harness::IdentityConfig cfg;
    for (int d : {1, 2})
        for (double q : {1.0, std::numeric_limits<double>::infinity()})
            for (long n : {2L, 4L, 8L, 16L}) cfg.cases.push_back({d, q, n, 256});
    cfg.points = 1000;
    auto rep = harness::run_identity_suite(cfg);
    double err = rep.metrics.front().value;
    report(1, "kernel identities (closed vs lattice)", rep.pass && err <= 1e-8,
           "max rel error " + fmt(err) + " <= 1e-8 over 16 cases x 1000 points");
}

void criterion_2_dirichlet_log_growth() {
    std::vector<double> logs, vals;
    for (int k = 2; k <= 9; ++k) {
        long n = 1L << k;
        KernelSpec spec;
        spec.dim = 1;
        spec.region = Region::ellinf;
        spec.method = Method::dirichlet;
        spec.n = {n};
        std::size_t G = 1;
        while (static_cast<long>(G) < 8 * n) G *= 2;
        vals.push_back(kernels::kernel_l1_norm(spec, G));
        logs.push_back(std::log(static_cast<double>(n)));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        sx += logs[i];
        sy += vals[i];
        sxx += logs[i] * logs[i];
        sxy += logs[i] * vals[i];
    }
    double b = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    double a = (sy - b * sx) / m;
    double ss_res = 0, ss_tot = 0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        ss_res += std::pow(vals[i] - (a + b * logs[i]), 2);
        ss_tot += std::pow(vals[i] - sy / m, 2);
    }
    double r2 = 1.0 - ss_res / ss_tot;
    report(2, "dirichlet L1 ~ log n", r2 >= 0.99 && b > 0.0,
           "fit R^2 " + fmt(r2) + " >= 0.99, slope " + fmt(b));
}

void criterion_3_riesz_uniform_bounds() {
    bool ok = true;
    std::string detail;
    struct Case {
        Region region;
        double alpha, gamma;
        const char* name;
    };
    for (const Case& c : {Case{Region::ell1, 1.0, 1.0, "q=1"},
                          Case{Region::ellinf, 1.0, 1.0, "q=inf"},
                          Case{Region::ell2, 1.0, 2.0, "q=2"}}) {
        std::vector<double> vals;
        for (long n : {8L, 16L, 32L, 64L, 128L}) {
            KernelSpec spec;
            spec.dim = 2;
            spec.region = c.region;
            spec.method = Method::riesz;
            spec.alpha = c.alpha;
            spec.gamma_exp = c.gamma;
            spec.n = {n};
            std::size_t G = 1;
            while (static_cast<long>(G) < 8 * n) G *= 2;
            vals.push_back(kernels::kernel_l1_norm(spec, G));
        }
        double growth = vals.back() / vals[vals.size() - 2] - 1.0;
        ok = ok && growth <= 0.05;
        detail += std::string(c.name) + " growth " + fmt(growth) + "; ";
    }
    double fejdev = 0.0;
    for (long n : {8L, 32L, 128L}) {
        KernelSpec fej;
        fej.dim = 1;
        fej.region = Region::ellinf;
        fej.method = Method::fejer;
        fej.n = {n};
        std::size_t G = 1;
        while (static_cast<long>(G) < 8 * n) G *= 2;
        fejdev = std::max(fejdev, std::abs(kernels::kernel_l1_norm(fej, G) - two_pi));
    }
    ok = ok && fejdev <= 1e-6;
    detail += "fejer-1d |L1-2pi| " + fmt(fejdev);
    report(3, "uniform riesz kernel bounds", ok, detail);
}

void criterion_4_bessel_suite() {
    const double h = 1e-5;
    double deriv_res = 0.0;
    for (double k : {0.0, 0.5, 1.0, 1.5})
        for (double t : {0.5, 1.0, 5.0, 20.0}) {
            double lhs = (special::bessel_j(k, t + h) - special::bessel_j(k, t - h)) / (2 * h);
            double rhs = k / t * special::bessel_j(k, t) - special::bessel_j(k + 1.0, t);
            deriv_res = std::max(deriv_res, std::abs(lhs - rhs));
        }

    double sonine_res = 0.0;
    for (double k : {0.0, 1.0})
        for (double l : {0.0, 1.0})
            for (double t : {1.0, 5.0}) {
                auto integrand = [&](double s) {
                    return special::bessel_j(k, t * s) * std::pow(s, k + 1.0) *
                           std::pow(1.0 - s * s, l);
                };
                double rhs = std::pow(t, l + 1.0) /
                             (std::pow(2.0, l) * special::gamma(l + 1.0)) *
                             quad::integrate(integrand, 0.0, 1.0);
                sonine_res = std::max(sonine_res, std::abs(special::bessel_j(k + l + 1.0, t) - rhs));
            }

    double decay_const = 0.0;
    for (double k : {0.0, 0.5, 1.0, 1.5})
        for (int i = 1; i <= 400; ++i) {
            double t = 100.0 * std::pow(10.0, -3.0 + 3.0 * i / 400.0);
            double scaled = std::abs(special::bessel_j(k, t)) /
                            std::min(std::pow(t, k), std::pow(t, -0.5));
            decay_const = std::max(decay_const, scaled);
        }

    bool ok = deriv_res <= 1e-6 && sonine_res <= 1e-7 && std::isfinite(decay_const);
    report(4, "bessel identities", ok,
           "derivative residual " + fmt(deriv_res) + " <= 1e-6, sonine residual " +
               fmt(sonine_res) + " <= 1e-7, recorded decay constant " + fmt(decay_const));
}

void criterion_5_radial_transform() {
    auto p = special::bochner_riesz_profile(1.0);
    double worst = 0.0;
    for (double r : {0.5, 1.0, 2.0, 5.0})
        worst = std::max(worst, std::abs(special::radial_fourier_transform(p, r, 2) -
                                         special::bochner_riesz_ft(1.0, 2, r)));
    report(5, "radial transform closed form vs quadrature", worst <= 1e-6,
           "max |diff| " + fmt(worst) + " <= 1e-6 over r in {0.5,1,2,5}");
}

void criterion_6_periodization() {
    auto th = theta_fejer();
    KernelSpec fej;
    fej.dim = 1;
    fej.region = Region::ellinf;
    fej.method = Method::fejer;
    fej.n = {8};
    long nv[] = {8};
    double worst = 0.0;
    for (int i = 0; i < 256; ++i) {
        double u = -pi + two_pi * i / 256.0;
        double x[] = {u};
        auto per = kernels::theta_kernel_periodized(th, nv, x, 40000);
        worst = std::max(worst, std::abs(per.value - kernels::summability_kernel(fej, x)));
    }
    report(6, "theta-kernel periodization", worst <= 1e-6,
           "max |lattice - periodized| " + fmt(worst) + " <= 1e-6 on a 256-grid");
}

void criterion_7_cesaro_degeneracy() {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        GridFunction f(2, 64);
        for (auto& v : f.samples) v = unif(rng);
        auto c = spectral::analyze(f);
        KernelSpec fej;
        fej.dim = 2;
        fej.region = trial % 2 == 0 ? Region::ell1 : Region::ellinf;
        fej.method = Method::fejer;
        fej.n = {12};
        KernelSpec ces = fej;
        ces.method = Method::cesaro;
        ces.alpha = 1.0;
        auto a = spectral::summability_mean(c, fej);
        auto b = spectral::summability_mean(c, ces);
        for (std::size_t i = 0; i < a.size(); ++i)
            worst = std::max(worst, std::abs(a.samples[i] - b.samples[i]));
    }
    report(7, "cesaro alpha=1 equals fejer", worst <= 1e-12,
           "max |diff| " + fmt(worst) + " <= 1e-12 on random spectra");
}

void criterion_8_jump_behavior() {
    harness::LebesgueConfig cfg;
    cfg.f_id = "jump";
    cfg.dim = 1;
    cfg.top_n = 512;
    cfg.tolerance = 0.01;
    auto rep = harness::run_lebesgue_experiment(cfg);
    double mid = 0.0, cont = 0.0;
    for (const auto& m : rep.metrics) {
        if (m.name == "jump_midpoint_error") mid = m.value;
        if (m.name == "continuity_error") cont = m.value;
    }
    report(8, "fejer jump midpoint", rep.pass,
           "midpoint error " + fmt(mid) + ", interior error " + fmt(cont) + " <= 0.01 at n=512");
}

void criterion_9_restricted_convergence() {
    harness::LebesgueConfig cfg;
    cfg.f_id = "bump";
    cfg.dim = 2;
    cfg.tau = 2.0;
    cfg.top_n = 256;
    cfg.G = 512;
    cfg.tolerance = 0.01;
    auto rep = harness::run_lebesgue_experiment(cfg);
    report(9, "restricted cone convergence", rep.pass,
           "max error over 100-point continuity sample " + fmt(rep.metrics.front().value) +
               " <= 0.01 at n1=256, G=512");
}

void criterion_10_maximal_oracle() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    GridFunction f(2, 32);
    for (auto& v : f.samples) v = unif(rng);
    auto fast = maximal::maximal_function(f, maximal::Variant::strong());
    auto brute = maximal::maximal_function_brute(f, maximal::Variant::strong());
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        worst = std::max(worst, std::abs(fast.samples[i] - brute.samples[i]));
    report(10, "strong maximal prefix-sum vs brute force", worst <= 1e-12,
           "max |diff| " + fmt(worst) + " <= 1e-12 on a 32^2 grid");
}

void criterion_11_weak_1_1() {
    const std::size_t G = 64;
    const double cell = std::pow(two_pi / static_cast<double>(G), 2);
    double worst = 0.0;
    for (int which = 0; which < 10; ++which) {
        GridFunction f(2, G);
        std::mt19937_64 rng(4000 + which);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        switch (which) {
            case 0: f.samples[0] = 1.0; break;
            case 1: f.samples[3 * G + 3] = 1.0; f.samples[44 * G + 17] = 2.0; break;
            case 2:
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j) f.samples[i * G + j] = 1.0;
                break;
            case 3:
                for (std::size_t i = 8; i < 40; ++i)
                    for (std::size_t j = 8; j < 40; ++j) f.samples[i * G + j] = 1.0;
                break;
            case 4:
                for (std::size_t i = 0; i < G; ++i) f.samples[i * G + i] = 1.0;
                break;
            default:
                for (auto& v : f.samples) v = unif(rng) < 0.03 ? 4.0 * unif(rng) : 0.0;
        }
        double l1 = 0.0;
        for (const auto& v : f.samples) l1 += std::abs(v) * cell;
        if (l1 == 0.0) continue;
        auto m = maximal::maximal_function(f, maximal::Variant::cube());
        std::vector<double> mv(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) mv[i] = m.samples[i].real();
        std::sort(mv.begin(), mv.end());
        for (std::size_t i = 0; i < mv.size(); ++i) {
            if (mv[i] == 0.0 || (i > 0 && mv[i] == mv[i - 1])) continue;
            double measure = cell * static_cast<double>(mv.size() - i);
            worst = std::max(worst, mv[i] * measure / l1);
        }
    }
    report(11, "weak (1,1) constant for the cube maximal", worst <= 8.0,
           "recorded sup rho lambda(Mf>rho)/|f|_1 = " + fmt(worst) + " <= 2^{d+1} = 8");
}

void criterion_12_domination() {
    harness::DominationConfig cfg;
    auto rep = harness::run_domination_experiment(cfg);
    std::string detail;
    for (const auto& m : rep.metrics)
        if (m.name.rfind("kernel_einf_sup", 0) == 0 || m.name == "kernel_constant_drift")
            detail += m.name + "=" + fmt(m.value) + " ";
    report(12, "maximal means dominated by M_box", rep.pass, detail);
}

void criterion_13_herz_dp_consistency() {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    double e1_gap = 0.0, worst_ratio = 1.0;
    for (int trial = 0; trial < 100; ++trial) {
        GridFunction f(1, 128);
        for (auto& v : f.samples) v = unif(rng);
        auto e1 = norms::herz_norm(f, 1.0);
        e1_gap = std::max(e1_gap, std::abs(e1.value - norms::lp_norm(f, 1.0)));
        double a = norms::dp_norm(f, 1.0, norms::DpForm::integral).value;
        double b = norms::dp_norm(f, 1.0, norms::DpForm::shell).value;
        double r = a / b;
        worst_ratio = std::max({worst_ratio, r, 1.0 / r});
    }
    bool ok = e1_gap <= 1e-10 && worst_ratio <= 16.0;
    report(13, "herz E1 = L1 and Dp form equivalence", ok,
           "E1-L1 gap " + fmt(e1_gap) + " <= 1e-10, recorded Dp ratio constant " +
               fmt(worst_ratio) + " <= 16");
}

void criterion_14_rotation() {
    bool enum_ok = true;
    for (long n = 1; n <= 16; ++n) {
        auto ball = kernels::ellq_ball(2, Region::ell1, n);
        if (ball.size() != static_cast<std::size_t>(2 * n * n + 2 * n + 1)) enum_ok = false;
        for (const auto& kl : ball)
            if (std::max(std::abs(kl[0] + kl[1]), std::abs(kl[1] - kl[0])) > n) enum_ok = false;
    }
    auto rep = harness::run_rotation_check(8, 20, 5);
    double var = 0.0, mean = 0.0;
    for (const auto& m : rep.metrics) {
        if (m.name == "factor_variance") var = m.value;
        if (m.name == "factor_mean") mean = m.value;
    }
    report(14, "rotation support bijection and factor", enum_ok && rep.pass,
           "bijection exact for n<=16; reported factor " + fmt(mean) + ", variance " + fmt(var) +
               " <= 1e-10");
}

void criterion_15_conjugate_transforms() {
    GridFunction f(1, 64);
    for (std::size_t j = 0; j < 64; ++j) f.samples[j] = std::cos(f.coordinate(j));
    spectral::ConjugateKind hilbert;
    hilbert.j = {1};
    auto t = spectral::synthesize(spectral::conjugate_transform(spectral::analyze(f), hilbert));
    double sin_err = 0.0;
    for (std::size_t j = 0; j < 64; ++j)
        sin_err = std::max(sin_err, std::abs(t.samples[j] - std::sin(f.coordinate(j))));

    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    GridFunction g(1, 64);
    for (auto& v : g.samples) v = unif(rng);
    auto c = spectral::analyze(g);
    long zero[] = {0};
    auto meanv = c.at(zero);
    auto twice = spectral::synthesize(
        spectral::conjugate_transform(spectral::conjugate_transform(c, hilbert), hilbert));
    double dbl_err = 0.0;
    for (std::size_t j = 0; j < 64; ++j)
        dbl_err = std::max(dbl_err, std::abs(twice.samples[j] - (meanv - g.samples[j])));

    report(15, "conjugate transforms", sin_err <= 1e-12 && dbl_err <= 1e-12,
           "hilbert(cos)=sin error " + fmt(sin_err) + ", double-hilbert error " + fmt(dbl_err) +
               " <= 1e-12");
}

} // namespace

int main() {
#ifdef _OPENMP
    if (const char* cap = std::getenv("SUMMA_THREADS"))
        omp_set_num_threads(std::max(1, std::atoi(cap)));
#endif
    criterion_1_kernel_identities();
    criterion_2_dirichlet_log_growth();
    criterion_3_riesz_uniform_bounds();
    criterion_4_bessel_suite();
    criterion_5_radial_transform();
    criterion_6_periodization();
    criterion_7_cesaro_degeneracy();
    criterion_8_jump_behavior();
    criterion_9_restricted_convergence();
    criterion_10_maximal_oracle();
    criterion_11_weak_1_1();
    criterion_12_domination();
    criterion_13_herz_dp_consistency();
    criterion_14_rotation();
    criterion_15_conjugate_transforms();
    std::printf("%d/15 criteria passed\n", 15 - failures);
    return failures == 0 ? 0 : 1;
}
