#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace summa {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

// Pairwise (tree) reduction. The summation order depends only on the array
// length, so reductions over values produced by parallel loops stay bitwise
// reproducible across thread counts.
inline double tree_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return tree_sum(v.subspan(0, half)) + tree_sum(v.subspan(half));
}

inline bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

// Side-length ladder 1,2,3,4,6,8,12,16,... (consecutive ratio <= 3/2),
// capped at `limit`.
inline std::vector<long> dyadic_plus_odd_ladder(long limit) {
    std::vector<long> out;
    for (long b = 1; b <= limit; b *= 2) {
        out.push_back(b);
        if (3 * (b / 2) > b && 3 * (b / 2) <= limit) out.push_back(3 * (b / 2));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t pow_size(std::size_t g, int d) {
    std::size_t n = 1;
    for (int i = 0; i < d; ++i) n *= g;
    return n;
}

} // namespace summa
