#include "obc/bdpc.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace obc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check_channel(const DirtyPaperChannel& ch) {
    require(ch.input_power > 0.0, "dirty paper channel: input power must be positive");
    require(ch.known_power >= 0.0, "dirty paper channel: known interference must be >= 0");
    require(ch.unknown_power >= 0.0, "dirty paper channel: unknown interference must be >= 0");
    require(ch.noise_power > 0.0, "dirty paper channel: noise power must be positive");
}

void check_alpha(double alpha) {
    require(alpha >= 0.0 && alpha <= 1.0, "inflation factor must lie in [0, 1]");
}

void check_rate(double rate) {
    require(std::isfinite(rate) && rate >= 0.0, "target rate must be finite and >= 0");
}

}  // namespace

double conditional_rate(const DirtyPaperChannel& ch, double alpha, double a) {
    check_channel(ch);
    check_alpha(alpha);
    require(a >= 0.0, "conditional_rate: gain must be >= 0");
    const double P = ch.input_power, Q1 = ch.known_power, Q2 = ch.unknown_power,
                 N0 = ch.noise_power;
    const double num = P * (a * (P + Q1 + Q2) + N0);
    const double den =
        (1.0 - alpha) * (1.0 - alpha) * a * P * Q1 + (P + alpha * alpha * Q1) * (a * Q2 + N0);
    return std::log(num / den);
}

double optimal_alpha(double target_rate) {
    check_rate(target_rate);
    return -std::expm1(-target_rate);
}

double outage_threshold(const DirtyPaperChannel& ch, double alpha, double target_rate) {
    check_channel(ch);
    check_alpha(alpha);
    check_rate(target_rate);
    const double P = ch.input_power, Q1 = ch.known_power, Q2 = ch.unknown_power,
                 N0 = ch.noise_power;
    const double beta = std::exp(target_rate);
    const double c1 = P * (P + Q1 + Q2) -
                      beta * ((1.0 - alpha) * (1.0 - alpha) * P * Q1 +
                              (P + alpha * alpha * Q1) * Q2);
    const double c0 = N0 * (beta * (P + alpha * alpha * Q1) - P);
    if (c0 <= 0.0) return 0.0;  // target met already at zero gain
    if (c1 <= 0.0) return kInf; // rate growth saturates below the target
    return c0 / c1;
}

double outage_prob(const DirtyPaperChannel& ch, double alpha, double target_rate) {
    const double threshold = outage_threshold(ch, alpha, target_rate);
    if (std::isinf(threshold)) return 1.0;
    return ch.fading.cdf(threshold);
}

double min_outage_prob(const DirtyPaperChannel& ch, double target_rate) {
    check_channel(ch);
    check_rate(target_rate);
    const double P = ch.input_power, Q2 = ch.unknown_power, N0 = ch.noise_power;
    const double growth = std::expm1(target_rate);
    const double margin = P - growth * Q2;
    if (margin <= 0.0) return 1.0;
    return ch.fading.cdf(N0 * growth / margin);
}

double alpha_dpc(const DirtyPaperChannel& ch, double a) {
    check_channel(ch);
    require(a >= 0.0, "alpha_dpc: gain must be >= 0");
    const double P = ch.input_power, Q2 = ch.unknown_power, N0 = ch.noise_power;
    return a * P / (a * (P + Q2) + N0);
}

double a_star(const DirtyPaperChannel& ch, double target_rate) {
    check_channel(ch);
    check_rate(target_rate);
    if (target_rate == 0.0) return 0.0;
    const double P = ch.input_power, Q2 = ch.unknown_power, N0 = ch.noise_power;
    auto rate_at = [&](double a) { return std::log1p(P * a / (Q2 * a + N0)); };
    double hi = N0 / P * std::expm1(target_rate);  // exact root when Q2 = 0
    for (int it = 0; it < 400 && rate_at(hi) < target_rate; ++it) {
        hi *= 2.0;
        if (hi > 1e300) throw std::domain_error("a_star: rate not achievable at any gain");
    }
    if (rate_at(hi) < target_rate)
        throw std::domain_error("a_star: rate not achievable at any gain");
    double lo = 0.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (rate_at(mid) < target_rate)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double decoding_gain_threshold(const SystemSpec& spec, const PowerAllocation& alloc, int k,
                               double rate) {
    require(alloc.size() == spec.num_users(), "decoding threshold: allocation length mismatch");
    require(k >= 0 && k < spec.num_users(), "decoding threshold: user index out of range");
    check_rate(rate);
    if (rate == 0.0) return 0.0;
    const double rho = spec.rho();
    const double growth = std::expm1(rate);
    double stronger = 0.0;  // stronger users' layers stay on as interference
    for (int m = 0; m < k; ++m) stronger += alloc[m];
    const double denom = rho * (alloc[k] - growth * stronger);
    if (denom <= 0.0) return kInf;
    return growth / denom;
}

double bdpc_user_outage(const SystemSpec& spec, const PowerAllocation& alloc, int k, double rate) {
    const double threshold = decoding_gain_threshold(spec, alloc, k, rate);
    if (std::isinf(threshold)) return 1.0;
    return spec.fading(k).cdf(threshold);
}

double bdpc_max_rate(const SystemSpec& spec, const PowerAllocation& alloc, int k, double epsilon) {
    require(alloc.size() == spec.num_users(), "max rate: allocation length mismatch");
    require(k >= 0 && k < spec.num_users(), "max rate: user index out of range");
    const double g = spec.fading(k).quantile(epsilon);
    const double rho = spec.rho();
    double stronger = 0.0;
    for (int m = 0; m < k; ++m) stronger += alloc[m];
    return std::log1p(g * alloc[k] * rho / (g * stronger * rho + 1.0));
}

}  // namespace obc
