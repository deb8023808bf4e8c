#pragma once

#include "summa/spectral.hpp"
#include "summa/theta.hpp"

#include <functional>
#include <string>

namespace summa::norms {

using spectral::GridFunction;

struct NormReport {
    double value = 0.0;
    std::string norm_id;
    int dim = 1;
    std::size_t grid = 0;
    int finest_shell = 0;   // smallest dyadic shell index that contributed
    double tail = 0.0;      // reported truncation tail bound, when meaningful
    bool converged = true;
};

enum class LpKind { strong, weak };

// Strong: ((2pi/G)^d sum |f|^p)^{1/p} (sup for p = inf). Weak: the quasinorm
// sup_rho rho lambda(|f| > rho)^{1/p}, attained at a sample magnitude.
double lp_norm(const GridFunction& f, double p, LpKind kind = LpKind::strong);

// Grid integral of |f| (log^+ |f|)^power.
double llogl_norm(const GridFunction& f, int power);

enum class HerzVariant { E, Eprime };

// Herz norm on the torus: sum over dyadic shells P_k (E: cube shells with
// weight 2^{kd(1-1/q)}, k <= 0; Eprime: per-coordinate product shells). The
// grid is partitioned exactly, so E_1 recovers the L1 norm.
NormReport herz_norm(const GridFunction& f, double q, HerzVariant variant = HerzVariant::E);

// E_q(R^d) norm of an evaluator sampled shell-wise over |x|_inf shells
// 2^{k-1} pi <= |x|_inf < 2^k pi for k in [k_min, k_max].
NormReport herz_norm_line(const std::function<double(std::span<const double>)>& f, int dim,
                          double q, int k_min, int k_max, int samples_per_dim = 64);

enum class DpForm { integral, shell };

// sup over dyadic r of (r^-d int_{[-r,r)^d} |f|^p)^{1/p}, or the equivalent
// shell form sup_{k<=0} 2^{-kd/p} |f 1_{P_k}|_p.
NormReport dp_norm(const GridFunction& f, double p, DpForm form);

// sum over integer translates of per-cell sups of |theta|, cells sampled at
// `samples` points per unit per dimension (exact tails for monotone
// catalog profiles enter through the reported tail bound).
NormReport wiener_amalgam_norm(const ThetaFunction& theta, long truncation_radius,
                               int samples = 64);

// L1 norm of the non-increasing majorant eta(x) = sup_{|t|_r >= |x|_r} |f(t)|
// computed shell-wise over |.|_r shells (r in {1, 2, inf}).
NormReport nonincreasing_majorant_l1(const std::function<double(double)>& radial_shell_sup,
                                     int dim, double r, int k_min, int k_max);

// Shell sup helper for evaluators on R^d: a_k = sup over the |.|_r shell
// 2^{k-1} pi <= |x|_r < 2^k pi of |f|, by sampling.
double shell_sup(const std::function<double(std::span<const double>)>& f, int dim, double r,
                 int k, int samples_per_dim = 64);

} // namespace summa::norms
