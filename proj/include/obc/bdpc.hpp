#pragma once

#include "obc/fading.hpp"
#include "obc/system.hpp"

namespace obc {

// Single-user side channel behind the broadcast analysis: the receiver
// sees gain a on a signal of power `input_power`, interference of power
// `known_power` that the transmitter knows and pre-cancels with inflation
// factor alpha, interference of power `unknown_power` nobody knows, and
// noise `noise_power`. The fading model describes the law of a.
struct DirtyPaperChannel {
    double input_power;
    double known_power;
    double unknown_power;
    double noise_power;
    FadingModel fading;
};

// Rate in nats guaranteed when the realized gain is exactly `a` and the
// precoder used inflation alpha. Maximized over alpha at alpha_dpc(a);
// for fixed alpha it is increasing in a.
double conditional_rate(const DirtyPaperChannel& ch, double alpha, double a);

// Gain-independent inflation factor that minimizes outage probability
// for a target rate: alpha = 1 - e^{-rate}.
double optimal_alpha(double target_rate);

// Smallest gain at which conditional_rate(alpha, a) reaches the target;
// +infinity when no finite gain suffices.
double outage_threshold(const DirtyPaperChannel& ch, double alpha, double target_rate);

// P[conditional_rate(alpha, gain) < target_rate] under the channel's
// fading law.
double outage_prob(const DirtyPaperChannel& ch, double alpha, double target_rate);

// Outage probability at the optimal inflation factor; the infimum of
// outage_prob over alpha.
double min_outage_prob(const DirtyPaperChannel& ch, double target_rate);

// Inflation factor a fully informed precoder would pick at gain a.
double alpha_dpc(const DirtyPaperChannel& ch, double a);

// Gain at which the interference-as-noise rate ln(1 + Pa/(Q2 a + N0))
// equals the target; solved by bisection. At this gain alpha_dpc
// coincides with optimal_alpha(target_rate). Throws std::domain_error
// when the target exceeds the rate achievable at any gain.
double a_star(const DirtyPaperChannel& ch, double target_rate);

// Smallest gain letting user k (internal order, 0-based) decode its own
// layer at `rate` under allocation gamma: interference from stronger
// users' layers is treated as noise, weaker layers are pre-cancelled.
// +infinity when the rate is unreachable for any gain.
double decoding_gain_threshold(const SystemSpec& spec, const PowerAllocation& alloc, int k,
                               double rate);

// Outage probability of user k served at `rate` inside the layered
// broadcast scheme: its fading law evaluated at the decoding threshold.
double bdpc_user_outage(const SystemSpec& spec, const PowerAllocation& alloc, int k, double rate);

// Largest rate user k can carry with outage probability at most
// `epsilon`; attained at the epsilon-quantile gain.
double bdpc_max_rate(const SystemSpec& spec, const PowerAllocation& alloc, int k, double epsilon);

}  // namespace obc
