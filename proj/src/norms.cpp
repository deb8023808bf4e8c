#include "summa/norms.hpp"

#include "summa/util.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace summa::norms {

double lp_norm(const GridFunction& f, double p, LpKind kind) {
    if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p > 0 required");
    const double cell = std::pow(two_pi / static_cast<double>(f.points_per_dim), f.dim);

    if (kind == LpKind::strong) {
        if (std::isinf(p)) {
            double m = 0.0;
            for (const auto& v : f.samples) m = std::max(m, std::abs(v));
            return m;
        }
        std::vector<double> powd(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            powd[i] = std::pow(std::abs(f.samples[i]), p);
        return std::pow(cell * tree_sum(powd), 1.0 / p);
    }

    if (std::isinf(p)) throw std::invalid_argument("lp_norm: weak norm needs finite p");
    // The distribution function is a step function of the sorted sample
    // magnitudes, so the sup is attained at one of them (approached from
    // below, i.e. with lambda(|f| >= rho)).
    std::vector<double> mags(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) mags[i] = std::abs(f.samples[i]);
    std::sort(mags.begin(), mags.end());
    double best = 0.0;
    for (std::size_t i = 0; i < mags.size(); ++i) {
        if (i > 0 && mags[i] == mags[i - 1]) continue;
        double rho = mags[i];
        if (rho == 0.0) continue;
        double measure = cell * static_cast<double>(mags.size() - i); // lambda(|f| >= rho)
        best = std::max(best, rho * std::pow(measure, 1.0 / p));
    }
    return best;
}

double llogl_norm(const GridFunction& f, int power) {
    if (power < 0) throw std::invalid_argument("llogl_norm: power >= 0 required");
    const double cell = std::pow(two_pi / static_cast<double>(f.points_per_dim), f.dim);
    std::vector<double> vals(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        double a = std::abs(f.samples[i]);
        double lg = a > 1.0 ? std::log(a) : 0.0;
        vals[i] = a * std::pow(lg, power);
    }
    return cell * tree_sum(vals);
}

namespace {

// Dyadic shell index: k with 2^{k-1} pi <= |x| < 2^k pi (half-open shells;
// the nudge keeps exact boundary points in the upper shell).
int shell_of(double norm_val) {
    if (norm_val <= 0.0) return std::numeric_limits<int>::min();
    return static_cast<int>(std::floor(std::log2(norm_val / pi) + 1e-12)) + 1;
}

double point_norm_inf(std::span<const double> x) {
    double m = 0.0;
    for (double xi : x) m = std::max(m, std::abs(xi));
    return m;
}

double point_norm_r(std::span<const double> x, double r) {
    if (std::isinf(r)) return point_norm_inf(x);
    double s = 0.0;
    for (double xi : x) s += std::pow(std::abs(xi), r);
    return std::pow(s, 1.0 / r);
}

} // namespace

NormReport herz_norm(const GridFunction& f, double q, HerzVariant variant) {
    if (!(q >= 1.0)) throw std::invalid_argument("herz_norm: q >= 1 required");
    const std::size_t G = f.points_per_dim;
    const double cell = std::pow(two_pi / static_cast<double>(G), f.dim);
    const bool qinf = std::isinf(q);

    NormReport rep;
    rep.norm_id = variant == HerzVariant::E ? "herz-E" : "herz-Eprime";
    rep.dim = f.dim;
    rep.grid = G;

    if (variant == HerzVariant::E) {
        // Partition every grid point into its |.|_inf shell; the origin joins
        // the innermost nonempty shell so that E_1 = L1 exactly.
        std::map<int, std::vector<double>> shells;
        int k_min_seen = 1;
        std::vector<double> x(f.dim);
        for (std::size_t i = 0; i < f.size(); ++i) {
            auto j = f.unflatten(i);
            for (int a = 0; a < f.dim; ++a) x[a] = f.coordinate(j[a]);
            int k = shell_of(point_norm_inf(x));
            if (k != std::numeric_limits<int>::min()) k = std::min(k, 0); // x = -pi folds into P_0
            double a = std::abs(f.samples[i]);
            if (k != std::numeric_limits<int>::min()) {
                shells[k].push_back(a);
                k_min_seen = std::min(k_min_seen, k);
            } else {
                shells[std::numeric_limits<int>::min()].push_back(a);
            }
        }
        // origin bucket -> innermost real shell
        auto origin = shells.find(std::numeric_limits<int>::min());
        if (origin != shells.end()) {
            int dest = shells.size() > 1 ? std::next(origin)->first : 0;
            for (double v : origin->second) shells[dest].push_back(v);
            shells.erase(std::numeric_limits<int>::min());
        }

        double total = 0.0;
        rep.finest_shell = 0;
        for (auto& [k, vals] : shells) {
            rep.finest_shell = std::min(rep.finest_shell, k);
            double piece;
            if (qinf) {
                piece = *std::max_element(vals.begin(), vals.end());
            } else {
                for (double& v : vals) v = std::pow(v, q);
                piece = std::pow(cell * tree_sum(vals), 1.0 / q);
            }
            total += std::pow(2.0, k * f.dim * (1.0 - (qinf ? 0.0 : 1.0 / q))) * piece;
        }
        rep.value = total;
        return rep;
    }

    // Eprime: product shells indexed by a vector k, weight prod 2^{k_j(1-1/q)}.
    std::map<std::vector<int>, std::vector<double>> shells;
    std::vector<double> x(f.dim);
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto j = f.unflatten(i);
        std::vector<int> key(f.dim);
        for (int a = 0; a < f.dim; ++a) {
            x[a] = f.coordinate(j[a]);
            double v[1] = {x[a]};
            key[a] = std::min(shell_of(point_norm_inf(v)), 0);
            if (key[a] == std::numeric_limits<int>::min()) key[a] = 1 - static_cast<int>(std::log2(G));
        }
        shells[key].push_back(std::abs(f.samples[i]));
    }
    double total = 0.0;
    rep.finest_shell = 0;
    for (auto& [key, vals] : shells) {
        double weight = 1.0;
        for (int kj : key) {
            weight *= std::pow(2.0, kj * (1.0 - (qinf ? 0.0 : 1.0 / q)));
            rep.finest_shell = std::min(rep.finest_shell, kj);
        }
        double piece;
        if (qinf) {
            piece = *std::max_element(vals.begin(), vals.end());
        } else {
            for (double& v : vals) v = std::pow(v, q);
            piece = std::pow(cell * tree_sum(vals), 1.0 / q);
        }
        total += weight * piece;
    }
    rep.value = total;
    return rep;
}

double shell_sup(const std::function<double(std::span<const double>)>& f, int dim, double r,
                 int k, int samples_per_dim) {
    // Sample the shell through radial scaling of directions on the unit
    // |.|_r sphere: x = rho * u with rho in [2^{k-1} pi, 2^k pi).
    const double lo = std::pow(2.0, k - 1) * pi, hi = std::pow(2.0, k) * pi;
    double sup = 0.0;
    std::vector<double> x(dim);
    if (dim == 1) {
        for (int i = 0; i < samples_per_dim; ++i) {
            double rho = lo + (hi - lo) * (static_cast<double>(i) + 0.5) / samples_per_dim;
            x[0] = rho;
            sup = std::max(sup, std::abs(f(x)));
            x[0] = -rho;
            sup = std::max(sup, std::abs(f(x)));
        }
        return sup;
    }
    // direction grid on the cube surface scaled to the r-sphere
    for (int i = 0; i < samples_per_dim; ++i) {
        for (int jdir = 0; jdir < samples_per_dim; ++jdir) {
            if (dim != 2) throw std::invalid_argument("shell_sup: dim <= 2 supported");
            double ang = two_pi * (static_cast<double>(i) + 0.5) / samples_per_dim;
            double u[2] = {std::cos(ang), std::sin(ang)};
            double un = point_norm_r(u, r);
            double rho = lo + (hi - lo) * (static_cast<double>(jdir) + 0.5) / samples_per_dim;
            x[0] = rho * u[0] / un;
            x[1] = rho * u[1] / un;
            sup = std::max(sup, std::abs(f(x)));
        }
    }
    return sup;
}

NormReport herz_norm_line(const std::function<double(std::span<const double>)>& f, int dim,
                          double q, int k_min, int k_max, int samples_per_dim) {
    if (!std::isinf(q))
        throw std::invalid_argument("herz_norm_line: only the E_inf variant is implemented");
    NormReport rep;
    rep.norm_id = "herz-Einf-line";
    rep.dim = dim;
    rep.finest_shell = k_min;
    double total = 0.0;
    double last = 0.0;
    for (int k = k_min; k <= k_max; ++k) {
        double a = shell_sup(f, dim, std::numeric_limits<double>::infinity(), k, samples_per_dim);
        last = std::pow(2.0, k * dim) * a;
        total += last;
    }
    rep.value = total;
    rep.tail = last; // decay diagnostic for the caller
    return rep;
}

NormReport dp_norm(const GridFunction& f, double p, DpForm form) {
    if (!(p >= 1.0)) throw std::invalid_argument("dp_norm: p >= 1 required");
    const std::size_t G = f.points_per_dim;
    const double cell = std::pow(two_pi / static_cast<double>(G), f.dim);

    NormReport rep;
    rep.norm_id = form == DpForm::integral ? "dp-integral" : "dp-shell";
    rep.dim = f.dim;
    rep.grid = G;

    const int k_lo = 2 - static_cast<int>(std::round(std::log2(static_cast<double>(G))));
    rep.finest_shell = k_lo;

    std::vector<double> x(f.dim);
    if (form == DpForm::integral) {
        double best = 0.0;
        for (int k = k_lo; k <= 0; ++k) {
            // half-open box [-r, r) with r = 2^k pi resolved in index space:
            // j in [G/2 - w, G/2 + w) with w = G 2^{k-1} grid cells
            const double r = std::pow(2.0, k) * pi;
            const std::size_t w = G >> static_cast<std::size_t>(1 - k);
            std::vector<double> inside;
            for (std::size_t i = 0; i < f.size(); ++i) {
                auto j = f.unflatten(i);
                bool in = true;
                for (int a = 0; a < f.dim && in; ++a)
                    in = j[a] >= G / 2 - w && j[a] < G / 2 + w;
                if (in) inside.push_back(std::pow(std::abs(f.samples[i]), p));
            }
            if (inside.empty()) continue;
            best = std::max(best, std::pow(std::pow(r, -f.dim) * cell * tree_sum(inside), 1.0 / p));
        }
        rep.value = best;
        return rep;
    }

    // shell form: sup_{k<=0} 2^{-kd/p} |f 1_{P_k}|_p over inf-shells; the
    // origin joins the innermost shell as in herz_norm
    std::map<int, std::vector<double>> shells;
    std::vector<double> origin_vals;
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto j = f.unflatten(i);
        for (int a = 0; a < f.dim; ++a) x[a] = f.coordinate(j[a]);
        int k = std::min(shell_of(point_norm_inf(x)), 0);
        if (k == std::numeric_limits<int>::min()) {
            origin_vals.push_back(std::pow(std::abs(f.samples[i]), p));
            continue;
        }
        shells[k].push_back(std::pow(std::abs(f.samples[i]), p));
    }
    if (!origin_vals.empty() && !shells.empty())
        for (double v : origin_vals) shells.begin()->second.push_back(v);
    double best = 0.0;
    for (auto& [k, vals] : shells) {
        double piece = std::pow(cell * tree_sum(vals), 1.0 / p);
        best = std::max(best, std::pow(2.0, -static_cast<double>(k * f.dim) / p) * piece);
        rep.finest_shell = std::min(rep.finest_shell, k);
    }
    rep.value = best;
    return rep;
}

NormReport wiener_amalgam_norm(const ThetaFunction& theta, long truncation_radius, int samples) {
    NormReport rep;
    rep.norm_id = "wiener-amalgam";
    rep.dim = theta.dim;

    const int d = theta.dim;
    if (d > 2) throw std::invalid_argument("wiener_amalgam_norm: dim <= 2 supported");

    double total = 0.0;
    std::vector<long> k(d, -truncation_radius);
    std::vector<double> x(d);
    while (true) {
        // per-cell sup over the closure [k, k+1]^d: midpoint grid plus the
        // 2^d corners, which makes the sup exact for monotone profiles
        double sup = 0.0;
        std::vector<int> s(d, 0);
        while (true) {
            for (int a = 0; a < d; ++a)
                x[a] = static_cast<double>(k[a]) +
                       (static_cast<double>(s[a]) + 0.5) / static_cast<double>(samples);
            sup = std::max(sup, std::abs(theta.value(x)));
            int a = d - 1;
            for (; a >= 0; --a) {
                if (++s[a] < samples) break;
                s[a] = 0;
            }
            if (a < 0) break;
        }
        std::vector<int> corner(d, 0);
        while (true) {
            for (int a = 0; a < d; ++a) x[a] = static_cast<double>(k[a] + corner[a]);
            sup = std::max(sup, std::abs(theta.value(x)));
            int a = d - 1;
            for (; a >= 0; --a) {
                if (++corner[a] <= 1) break;
                corner[a] = 0;
            }
            if (a < 0) break;
        }
        total += sup;
        int a = d - 1;
        for (; a >= 0; --a) {
            if (++k[a] <= truncation_radius) break;
            k[a] = -truncation_radius;
        }
        if (a < 0) break;
    }
    rep.value = total;
    rep.tail = theta.wiener_tail ? theta.wiener_tail(static_cast<double>(truncation_radius + 1))
                                 : 0.0;
    rep.converged = rep.tail <= 1e-6;
    if (!rep.converged) throw std::runtime_error("wiener_amalgam_norm: tail bound exceeds 1e-6");
    return rep;
}

NormReport nonincreasing_majorant_l1(const std::function<double(double)>& radial_shell_sup,
                                     int dim, double r, int k_min, int k_max) {
    // Shell volume of {|x|_r < s} is v_{d,r} s^d with
    // v_{d,r} = (2 Gamma(1/r+1))^d / Gamma(d/r+1); r = inf gives 2^d.
    double vball;
    if (std::isinf(r)) {
        vball = std::pow(2.0, dim);
    } else {
        vball = std::pow(2.0 * std::tgamma(1.0 / r + 1.0), dim) / std::tgamma(dim / r + 1.0);
    }

    NormReport rep;
    rep.norm_id = "majorant-l1";
    rep.dim = dim;
    rep.finest_shell = k_min;

    std::vector<double> sups(static_cast<std::size_t>(k_max - k_min + 1));
    for (int k = k_min; k <= k_max; ++k)
        sups[static_cast<std::size_t>(k - k_min)] = std::abs(radial_shell_sup(static_cast<double>(k)));
    // running max from the outside in: eta on shell k is sup over shells >= k
    double running = 0.0;
    std::vector<double> eta(sups.size());
    for (int i = static_cast<int>(sups.size()) - 1; i >= 0; --i) {
        running = std::max(running, sups[static_cast<std::size_t>(i)]);
        eta[static_cast<std::size_t>(i)] = running;
    }
    double total = 0.0;
    for (int k = k_min; k <= k_max; ++k) {
        double vol = vball * (std::pow(std::pow(2.0, k) * pi, dim) -
                              std::pow(std::pow(2.0, k - 1) * pi, dim));
        total += eta[static_cast<std::size_t>(k - k_min)] * vol;
    }
    // innermost ball, where eta is constant at the overall sup
    total += eta.front() * vball * std::pow(std::pow(2.0, k_min - 1) * pi, dim);
    rep.value = total;
    rep.tail = eta.back() * vball * std::pow(std::pow(2.0, k_max) * pi, dim);
    return rep;
}

} // namespace summa::norms
