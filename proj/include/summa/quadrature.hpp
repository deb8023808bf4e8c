#pragma once

#include <functional>
#include <vector>

namespace summa::quad {

struct Rule {
    std::vector<double> nodes;   // on (-1, 1)
    std::vector<double> weights;
};

// Gauss-Legendre rule of order n (nodes of P_n, found by Newton iteration).
const Rule& gauss_legendre(int n);

// Integral over [a, b] with one n-point panel.
double panel(const std::function<double(double)>& f, double a, double b, int n = 64);

// Composite rule: 64-point panels, `per_unit` panels per unit length
// (at least one panel total).
double integrate(const std::function<double(double)>& f, double a, double b,
                 int per_unit = 1);

struct TailResult {
    double value = 0.0;
    double tail_estimate = 0.0;
    bool converged = false;
};

// Integral over [a, inf): unit panels are added until one falls below
// `tol` in magnitude, which is then reported as the tail estimate.
TailResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                 double tol = 1e-12, double hard_limit = 512.0);

} // namespace summa::quad
