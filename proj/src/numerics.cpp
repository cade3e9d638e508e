#include "obc/numerics.hpp"

#include <cmath>

namespace obc::num {

namespace {

// Series expansion of P(a, x), accurate for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-17) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_p(int shape, double x) {
    if (shape < 1) throw std::domain_error("regularized_gamma_p: shape must be >= 1");
    if (x < 0.0) throw std::domain_error("regularized_gamma_p: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (x < shape + 1.0) return gamma_p_series(static_cast<double>(shape), x);
    // For integer shape, Q(shape, x) is a finite Poisson tail; the terms
    // never exceed 1 (each is e^{-x} x^i / i! with i < shape <= x), so the
    // sum is cancellation-free.
    double term = std::exp(-x);
    double q = term;
    for (int i = 1; i < shape; ++i) {
        term *= x / static_cast<double>(i);
        q += term;
    }
    return 1.0 - q;
}

Interval wilson_interval(std::int64_t successes, std::int64_t trials, double z) {
    if (trials <= 0) throw std::domain_error("wilson_interval: trials must be > 0");
    if (successes < 0 || successes > trials)
        throw std::domain_error("wilson_interval: successes out of range");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    // At the boundary counts one endpoint is exactly the observed
    // proportion; rounding in center - half must not move it.
    const double low = successes == 0 ? 0.0 : std::max(0.0, center - half);
    const double high = successes == trials ? 1.0 : std::min(1.0, center + half);
    return {low, high};
}

}  // namespace obc::num
