// Timing comparison between the OpenMP paths and their serial references:
// multi-dimensional transforms (plus the naive DFT), kernel grid sweeps,
// and the sliding-window vs brute-force maximal function.

#include "summa/fft.hpp"
#include "summa/kernels.hpp"
#include "summa/maximal.hpp"
#include "summa/util.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace summa;

namespace {

template <typename F>
double time_ms(F&& body, int reps = 3) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        body();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void row(const char* label, double serial_ms, double parallel_ms) {
    std::printf("%-36s %10.2f ms %10.2f ms %8.2fx\n", label, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

} // namespace

int main() {
#ifdef _OPENMP
    if (const char* cap = std::getenv("SUMMA_THREADS"))
        omp_set_num_threads(std::max(1, std::atoi(cap)));
    std::printf("threads: %d\n", omp_get_max_threads());
#endif
    std::printf("%-36s %13s %13s %9s\n", "benchmark", "serial", "parallel", "speedup");

    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);

    {
        const std::size_t g = 512;
        std::vector<fft::cplx> data(g * g);
        for (auto& v : data) v = {unif(rng), unif(rng)};
        auto a = data, b = data;
        double ts = time_ms([&] {
            a = data;
            fft::transform_nd_serial(a, 2, g, -1);
        });
        double tp = time_ms([&] {
            b = data;
            fft::transform_nd(b, 2, g, -1);
        });
        row("fft 512^2", ts, tp);
    }
    {
        std::vector<fft::cplx> x(4096);
        for (auto& v : x) v = {unif(rng), unif(rng)};
        double tn = time_ms([&] { auto r = fft::naive_dft(x, -1); (void)r; }, 1);
        double tf = time_ms([&] {
            auto r = x;
            fft::transform(r.data(), r.size(), -1);
        });
        row("dft 4096: naive vs fft", tn, tf);
    }
    {
        kernels::KernelSpec spec;
        spec.dim = 2;
        spec.region = kernels::Region::ell2;
        spec.method = kernels::Method::riesz;
        spec.alpha = 1.0;
        spec.gamma_exp = 2.0;
        spec.n = {64};
        double ts = time_ms([&] { auto r = kernels::kernel_grid_serial(spec, 512); (void)r; });
        double tp = time_ms([&] { auto r = kernels::kernel_grid(spec, 512); (void)r; });
        row("bochner-riesz kernel grid 512^2", ts, tp);
    }
    {
        spectral::GridFunction f(2, 32);
        for (auto& v : f.samples) v = unif(rng);
        double tb = time_ms(
            [&] { auto r = maximal::maximal_function_brute(f, maximal::Variant::strong()); (void)r; },
            1);
        double tw = time_ms(
            [&] { auto r = maximal::maximal_function(f, maximal::Variant::strong()); (void)r; });
        row("strong maximal 32^2: brute vs fast", tb, tw);
    }
    {
        spectral::GridFunction f(2, 256);
        for (auto& v : f.samples) v = unif(rng);
        double tw = time_ms(
            [&] { auto r = maximal::maximal_function(f, maximal::Variant::strong()); (void)r; });
        std::printf("%-36s %10s    %10.2f ms\n", "strong maximal 256^2 (fast only)", "-", tw);
    }
    return 0;
}
