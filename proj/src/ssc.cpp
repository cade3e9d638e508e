#include "obc/ssc.hpp"

#include <cmath>
#include <stdexcept>

#include "obc/bdpc.hpp"
#include "obc/numerics.hpp"
#include "obc/rng.hpp"

namespace obc {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check_rates(const SystemSpec& spec, const PowerAllocation& alloc, const RatePoint& rates) {
    require(alloc.size() == spec.num_users(), "cascade: allocation length mismatch");
    require(rates.size() == spec.num_users(), "cascade: rate length mismatch");
    for (Eigen::Index j = 0; j < rates.size(); ++j)
        require(std::isfinite(rates[j]) && rates[j] >= 0.0,
                "cascade: rates must be finite and >= 0");
}

}  // namespace

bool DecodingIndicator::is_suffix_form() const {
    bool failed = false;
    for (const auto bit : bits) {
        if (failed && bit) return false;
        if (!bit) failed = true;
    }
    return true;
}

DecodingIndicator cascade(const SystemSpec& spec, const PowerAllocation& alloc,
                          const RatePoint& rates, int k, double a) {
    check_rates(spec, alloc, rates);
    const int K = spec.num_users();
    require(k >= 0 && k < K, "cascade: user index out of range");
    require(std::isfinite(a) && a >= 0.0, "cascade: gain must be >= 0");

    const double rho = spec.rho();
    DecodingIndicator ind;
    ind.bits.reserve(static_cast<std::size_t>(K - k));
    double undecoded = 1.0;  // power fraction still on the air
    for (int j = K - 1; j >= k; --j) {
        const double interference = undecoded - alloc[j];
        const double rate_j = std::log1p(a * alloc[j] * rho / (1.0 + a * rho * interference));
        const bool ok = rates[j] < rate_j;
        if (ok) undecoded -= alloc[j];
        ind.bits.push_back(ok ? 1 : 0);
    }
    return ind;
}

double analytic_outage(const SystemSpec& spec, const PowerAllocation& alloc,
                       const RatePoint& rates, int k) {
    check_rates(spec, alloc, rates);
    const int K = spec.num_users();
    require(k >= 0 && k < K, "analytic outage: user index out of range");
    for (int j = 0; j < K; ++j) {
        if (!(rates[j] < bdpc_max_rate(spec, alloc, j, spec.epsilon(j))))
            throw std::domain_error(
                "analytic outage: rates must lie strictly inside the region for this allocation");
    }
    // In-region rates make each layer's success a gain-threshold event,
    // and failures only cascade forward; decoding down to layer k
    // succeeds exactly when the gain clears every threshold from K-1
    // down to k.
    double worst = 0.0;
    for (int j = K - 1; j >= k; --j)
        worst = std::max(worst, decoding_gain_threshold(spec, alloc, j, rates[j]));
    return spec.fading(k).cdf(worst);
}

McReport mc_outage(const SystemSpec& spec, const PowerAllocation& alloc, const RatePoint& rates,
                   std::int64_t trials, std::uint64_t seed) {
    check_rates(spec, alloc, rates);
    require(trials > 0, "mc outage: trials must be > 0");

    const int K = spec.num_users();
    McReport report;
    report.seed = seed;
    report.trials_per_user = trials;
    report.users.resize(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        const Eigen::VectorXd gains =
            spec.fading(k).sample(rng::substream_seed(seed, static_cast<std::uint64_t>(k)),
                                  static_cast<Eigen::Index>(trials));
        UserMcResult& res = report.users[static_cast<std::size_t>(k)];
        res.trials = trials;
        for (Eigen::Index i = 0; i < gains.size(); ++i) {
            const DecodingIndicator ind = cascade(spec, alloc, rates, k, gains[i]);
            if (!ind.own_message_decoded()) ++res.outages;
            if (!ind.is_suffix_form()) ++res.indicator_violations;
        }
        res.estimate = static_cast<double>(res.outages) / static_cast<double>(trials);
        const auto ci = num::wilson_interval(res.outages, trials, num::z_95);
        res.ci_low = ci.low;
        res.ci_high = ci.high;
    }
    return report;
}

std::int64_t suffix_claim_check(const SystemSpec& spec, const PowerAllocation& alloc,
                                const RatePoint& rates, std::int64_t trials, std::uint64_t seed) {
    const McReport report = mc_outage(spec, alloc, rates, trials, seed);
    std::int64_t total = 0;
    for (const auto& u : report.users) total += u.indicator_violations;
    return total;
}

}  // namespace obc
