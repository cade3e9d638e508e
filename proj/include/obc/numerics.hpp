#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace obc::num {

// Regularized lower incomplete gamma P(shape, x) for integer shape >= 1.
// This is the CDF of a sum of `shape` iid unit-mean exponentials at x.
double regularized_gamma_p(int shape, double x);

// Root of f(a) = target on [lo, hi] for nondecreasing f, by bisection.
// Requires f(lo) <= target <= f(hi). Returns a point within `tol`
// (absolute) of the root.
template <class F>
double bisect_nondecreasing(F&& f, double lo, double hi, double target, double tol) {
    if (!(lo <= hi)) throw std::invalid_argument("bisect: empty bracket");
    for (int it = 0; it < 400 && (hi - lo) > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

struct Interval {
    double low;
    double high;
};

// Wilson score interval for a binomial proportion. `z` is the two-sided
// normal critical value (1.959963984540054 for 95%).
Interval wilson_interval(std::int64_t successes, std::int64_t trials, double z);

inline constexpr double z_95 = 1.959963984540054;
inline constexpr double z_999 = 3.2905267314919255;  // two-sided 99.9%

}  // namespace obc::num
