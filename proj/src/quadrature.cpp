#include "summa/quadrature.hpp"

#include "summa/util.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace summa::quad {

static Rule compute_rule(int n) {
    Rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        r.weights[n - 1 - i] = r.weights[i];
    }
    return r;
}

const Rule& gauss_legendre(int n) {
    static std::map<int, Rule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

double panel(const std::function<double(double)>& f, double a, double b, int n) {
    const Rule& r = gauss_legendre(n);
    const double mid = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += r.weights[i] * f(mid + h * r.nodes[i]);
    return h * s;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 int per_unit) {
    if (!(b > a)) return 0.0;
    long panels = std::max<long>(1, std::lround(std::ceil((b - a) * per_unit)));
    std::vector<double> parts(panels);
    const double h = (b - a) / static_cast<double>(panels);
    for (long i = 0; i < panels; ++i)
        parts[i] = panel(f, a + i * h, a + (i + 1) * h);
    return tree_sum(parts);
}

TailResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                 double tol, double hard_limit) {
    TailResult res;
    double x = a;
    while (x < a + hard_limit) {
        double chunk = panel(f, x, x + 1.0);
        res.value += chunk;
        x += 1.0;
        if (std::abs(chunk) < tol) {
            res.tail_estimate = std::abs(chunk);
            res.converged = true;
            return res;
        }
    }
    res.tail_estimate = std::abs(panel(f, x, x + 1.0));
    res.converged = res.tail_estimate < tol;
    return res;
}

} // namespace summa::quad
