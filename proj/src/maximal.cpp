#include "summa/maximal.hpp"

#include "summa/util.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace summa::maximal {

namespace {

// Leading-window circular sum along one axis:
//   out[x] = sum_{m=0}^{w-1} in[x + m (mod G along axis)]
void windowed_sum_axis(const std::vector<double>& in, std::vector<double>& out, int d,
                       std::size_t G, int axis, long w) {
    std::size_t stride = 1;
    for (int a = d - 1; a > axis; --a) stride *= G;
    const std::size_t lines = in.size() / G;
#pragma omp parallel for schedule(static) if (in.size() >= 16384)
    for (long long li = 0; li < static_cast<long long>(lines); ++li) {
        const std::size_t inner = static_cast<std::size_t>(li) % stride;
        const std::size_t outer = static_cast<std::size_t>(li) / stride;
        const std::size_t base = outer * stride * G + inner;
        double run = 0.0;
        for (long m = 0; m < w; ++m) run += in[base + (m % static_cast<long>(G)) * stride];
        for (std::size_t x = 0; x < G; ++x) {
            out[base + x * stride] = run;
            run -= in[base + x * stride];
            run += in[base + ((x + static_cast<std::size_t>(w)) % G) * stride];
        }
    }
}

// Circular sliding maximum over the trailing window of width w:
//   out[x] = max_{j=0}^{w-1} in[x - j (mod G along axis)]
void sliding_max_axis(const std::vector<double>& in, std::vector<double>& out, int d,
                      std::size_t G, int axis, long w) {
    std::size_t stride = 1;
    for (int a = d - 1; a > axis; --a) stride *= G;
    const std::size_t lines = in.size() / G;
#pragma omp parallel for schedule(static) if (in.size() >= 16384)
    for (long long li = 0; li < static_cast<long long>(lines); ++li) {
        const std::size_t inner = static_cast<std::size_t>(li) % stride;
        const std::size_t outer = static_cast<std::size_t>(li) / stride;
        const std::size_t base = outer * stride * G + inner;
        std::deque<long> dq; // indices into the virtual doubled line, values decreasing
        auto at = [&](long t) { return in[base + (static_cast<std::size_t>(t) % G) * stride]; };
        long start = -static_cast<long>(w) + 1 + static_cast<long>(G);
        for (long t = start; t < start + static_cast<long>(w) - 1; ++t) {
            while (!dq.empty() && at(dq.back()) <= at(t)) dq.pop_back();
            dq.push_back(t);
        }
        for (long x = 0; x < static_cast<long>(G); ++x) {
            long t = start + static_cast<long>(w) - 1 + x;
            while (!dq.empty() && at(dq.back()) <= at(t)) dq.pop_back();
            dq.push_back(t);
            while (dq.front() < t - static_cast<long>(w) + 1) dq.pop_front();
            out[base + static_cast<std::size_t>(x) * stride] = at(dq.front());
        }
    }
}

std::vector<std::vector<long>> shape_set(int d, std::size_t G, const Variant& v) {
    auto ladder = dyadic_plus_odd_ladder(static_cast<long>(G) / 2);
    std::vector<std::vector<long>> shapes;
    if (v.kind == Variant::Kind::cube) {
        for (long w : ladder) shapes.push_back(std::vector<long>(d, w));
        return shapes;
    }
    std::vector<std::size_t> pick(d, 0);
    while (true) {
        std::vector<long> w(d);
        long lo = ladder[pick[0]], hi = ladder[pick[0]];
        for (int a = 0; a < d; ++a) {
            w[a] = ladder[pick[a]];
            lo = std::min(lo, w[a]);
            hi = std::max(hi, w[a]);
        }
        if (v.kind == Variant::Kind::strong ||
            static_cast<double>(hi) <= v.tau * static_cast<double>(lo))
            shapes.push_back(std::move(w));
        int a = d - 1;
        for (; a >= 0; --a) {
            if (++pick[a] < ladder.size()) break;
            pick[a] = 0;
        }
        if (a < 0) break;
    }
    return shapes;
}

} // namespace

GridFunction maximal_function(const GridFunction& f, const Variant& v) {
    const int d = f.dim;
    const std::size_t G = f.points_per_dim;
    std::vector<double> absf(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) absf[i] = std::abs(f.samples[i]);

    GridFunction out(d, G);
    std::vector<double> best(f.size(), 0.0);
    std::vector<double> work(f.size()), tmp(f.size());

    for (const auto& w : shape_set(d, G, v)) {
        work = absf;
        for (int a = 0; a < d; ++a) {
            windowed_sum_axis(work, tmp, d, G, a, w[a]);
            std::swap(work, tmp);
        }
        for (int a = 0; a < d; ++a) {
            sliding_max_axis(work, tmp, d, G, a, w[a]);
            std::swap(work, tmp);
        }
        double count = 1.0;
        for (long wa : w) count *= static_cast<double>(wa);
#pragma omp parallel for schedule(static) if (best.size() >= 16384)
        for (long long i = 0; i < static_cast<long long>(best.size()); ++i)
            best[i] = std::max(best[i], work[i] / count);
    }
    for (std::size_t i = 0; i < best.size(); ++i) out.samples[i] = best[i];
    return out;
}

GridFunction maximal_function_brute(const GridFunction& f, const Variant& v) {
    const int d = f.dim;
    const std::size_t G = f.points_per_dim;
    std::vector<double> absf(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) absf[i] = std::abs(f.samples[i]);
    auto shapes = shape_set(d, G, v);

    GridFunction out(d, G);
#pragma omp parallel for schedule(dynamic)
    for (long long idx = 0; idx < static_cast<long long>(f.size()); ++idx) {
        auto j = f.unflatten(static_cast<std::size_t>(idx));
        double best = 0.0;
        std::vector<std::size_t> cell(d);
        for (const auto& w : shapes) {
            // every anchor offset that keeps x inside the rectangle
            std::vector<long> off(d, 0);
            while (true) {
                double sum = 0.0;
                std::vector<long> m(d, 0);
                while (true) {
                    for (int a = 0; a < d; ++a)
                        cell[a] = (j[a] + G - static_cast<std::size_t>(off[a]) +
                                   static_cast<std::size_t>(m[a])) %
                                  G;
                    sum += absf[f.flatten(cell)];
                    int a = d - 1;
                    for (; a >= 0; --a) {
                        if (++m[a] < w[a]) break;
                        m[a] = 0;
                    }
                    if (a < 0) break;
                }
                double count = 1.0;
                for (long wa : w) count *= static_cast<double>(wa);
                best = std::max(best, sum / count);
                int a = d - 1;
                for (; a >= 0; --a) {
                    if (++off[a] < w[a]) break;
                    off[a] = 0;
                }
                if (a < 0) break;
            }
        }
        out.samples[idx] = best;
    }
    return out;
}

IndexSet IndexSet::single(std::vector<long> n) {
    IndexSet s;
    s.members.push_back(std::move(n));
    return s;
}

IndexSet IndexSet::box(int dim, long N) {
    IndexSet s;
    auto ladder = dyadic_plus_odd_ladder(N);
    std::vector<std::size_t> pick(dim, 0);
    while (true) {
        std::vector<long> n(dim);
        for (int a = 0; a < dim; ++a) n[a] = ladder[pick[a]];
        s.members.push_back(std::move(n));
        int a = dim - 1;
        for (; a >= 0; --a) {
            if (++pick[a] < ladder.size()) break;
            pick[a] = 0;
        }
        if (a < 0) break;
    }
    return s;
}

IndexSet IndexSet::cone(int dim, double tau, long N) {
    if (tau < 1.0) throw std::invalid_argument("IndexSet::cone: tau >= 1 required");
    IndexSet s = box(dim, N);
    std::erase_if(s.members, [tau](const std::vector<long>& n) {
        long lo = n[0], hi = n[0];
        for (long ni : n) {
            lo = std::min(lo, ni);
            hi = std::max(hi, ni);
        }
        return static_cast<double>(hi) > tau * static_cast<double>(lo);
    });
    return s;
}

IndexSet IndexSet::cone_like(const std::vector<std::function<double(double)>>& gammas,
                             const std::vector<double>& taus, long N) {
    if (gammas.size() != taus.size())
        throw std::invalid_argument("IndexSet::cone_like: gamma/tau arity mismatch");
    const int dim = static_cast<int>(gammas.size()) + 1;
    IndexSet s;

    // Dyadic doubling ratios gamma(2x)/gamma(x) must stay in (1, inf); their
    // log2 range gives the omega exponents (with xi = 2).
    for (std::size_t j = 0; j < gammas.size(); ++j) {
        if (!(taus[j] >= 1.0)) throw std::invalid_argument("IndexSet::cone_like: tau_j >= 1");
        double c1 = std::numeric_limits<double>::infinity(), c2 = 0.0;
        double prev = gammas[j](1.0);
        for (double x = 1.0; 2.0 * x <= static_cast<double>(std::max(N, 2L)); x *= 2.0) {
            double cur = gammas[j](2.0 * x);
            if (!(cur > prev))
                throw std::invalid_argument("IndexSet::cone_like: gamma_j must be strictly increasing");
            double ratio = cur / prev;
            c1 = std::min(c1, ratio);
            c2 = std::max(c2, ratio);
            prev = cur;
        }
        if (!(c1 > 1.0) || !std::isfinite(c2))
            throw std::invalid_argument("IndexSet::cone_like: doubling condition violated");
        s.omega_lower.push_back(std::log2(c1));
        s.omega_upper.push_back(std::log2(c2));
    }

    auto ladder = dyadic_plus_odd_ladder(N);
    for (long n1 : ladder) {
        std::vector<std::vector<long>> partial{{n1}};
        for (std::size_t j = 0; j < gammas.size(); ++j) {
            double g = gammas[j](static_cast<double>(n1));
            std::vector<std::vector<long>> next;
            for (long nj : ladder) {
                if (static_cast<double>(nj) < g / taus[j] || static_cast<double>(nj) > g * taus[j])
                    continue;
                for (const auto& p : partial) {
                    auto q = p;
                    q.push_back(nj);
                    next.push_back(std::move(q));
                }
            }
            partial = std::move(next);
        }
        for (auto& p : partial)
            if (static_cast<int>(p.size()) == dim) s.members.push_back(std::move(p));
    }
    return s;
}

GridFunction maximal_mean(const Spectrum& c, const kernels::KernelSpec& family,
                          const IndexSet& indices, bool absolute) {
    if (indices.members.empty()) throw std::invalid_argument("maximal_mean: empty index set");
    const std::size_t G = c.points_per_dim;

    GridFunction out(c.dim, G);
    std::vector<double> best(out.size(), 0.0);

    GridFunction absf(c.dim, G);
    if (absolute) {
        if (c.dim != 1) throw std::invalid_argument("maximal_mean: absolute variant is 1-D only");
        auto f = spectral::synthesize(c);
        for (std::size_t i = 0; i < f.size(); ++i) absf.samples[i] = std::abs(f.samples[i]);
    }

    for (const auto& n : indices.members) {
        kernels::KernelSpec spec = family;
        if (spec.region == kernels::Region::rectangular) {
            if (static_cast<int>(n.size()) != c.dim)
                throw std::invalid_argument("maximal_mean: index arity mismatch");
            spec.n = n;
        } else {
            spec.n = {n.front()};
        }
        GridFunction term(c.dim, G);
        if (absolute) {
            auto kvals = kernels::kernel_grid(spec, G);
            GridFunction kern(1, G);
            for (std::size_t i = 0; i < G; ++i) kern.samples[i] = std::abs(kvals[i]);
            term = spectral::grid_convolve(absf, kern);
        } else {
            term = spectral::summability_mean(c, spec);
        }
        for (std::size_t i = 0; i < best.size(); ++i)
            best[i] = std::max(best[i], std::abs(term.samples[i]));
    }
    for (std::size_t i = 0; i < best.size(); ++i) out.samples[i] = best[i];
    return out;
}

std::vector<double> default_poisson_times() {
    std::vector<double> t(32);
    const double lo = 1e-3, hi = 4.0;
    for (int i = 0; i < 32; ++i)
        t[i] = lo * std::pow(hi / lo, static_cast<double>(i) / 31.0);
    return t;
}

GridFunction poisson_maximal(const GridFunction& f, std::span<const double> t_grid) {
    if (t_grid.empty()) throw std::invalid_argument("poisson_maximal: empty time grid");
    for (double t : t_grid)
        if (!(t > 1e-4) || !(t <= 10.0))
            throw std::invalid_argument("poisson_maximal: times must lie in (1e-4, 10]");

    auto c = spectral::analyze(f);
    const long h = c.half();
    GridFunction out(f.dim, f.points_per_dim);
    std::vector<double> best(f.size(), 0.0);

    Spectrum damped(f.dim, f.points_per_dim);
    for (double t : t_grid) {
        for (std::size_t idx = 0; idx < c.coefficients.size(); ++idx) {
            // decode the signed index to get |k|_2
            std::size_t rest = idx;
            double norm2 = 0.0;
            for (int a = f.dim - 1; a >= 0; --a) {
                long k = static_cast<long>(rest % f.points_per_dim) - h;
                rest /= f.points_per_dim;
                norm2 += static_cast<double>(k) * static_cast<double>(k);
            }
            damped.coefficients[idx] = c.coefficients[idx] * std::exp(-t * std::sqrt(norm2));
        }
        auto conv = spectral::synthesize(damped);
        for (std::size_t i = 0; i < best.size(); ++i)
            best[i] = std::max(best[i], std::abs(conv.samples[i]));
    }
    for (std::size_t i = 0; i < best.size(); ++i) out.samples[i] = best[i];
    return out;
}

} // namespace summa::maximal
