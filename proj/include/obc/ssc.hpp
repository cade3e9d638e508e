#pragma once

#include <cstdint>
#include <vector>

#include "obc/system.hpp"

namespace obc {

// What receiver k managed to strip in one decoding pass. Bit l records
// the attempt on user (K-1-l)'s message (internal order), i.e. bits run
// weakest layer first, own message last.
struct DecodingIndicator {
    std::vector<std::uint8_t> bits;

    bool own_message_decoded() const { return !bits.empty() && bits.back() != 0; }

    // Once one layer fails, every later attempt faces at least as much
    // interference, so a correct cascade never decodes after a failure.
    bool is_suffix_form() const;
};

// Simulates receiver k's successive-cancellation pass at realized gain
// `a`: layers are attempted weakest first, a decoded layer is removed,
// a failed layer's power stays as interference for every later attempt.
// `rates` are the served rates (internal order; nats).
DecodingIndicator cascade(const SystemSpec& spec, const PowerAllocation& alloc,
                          const RatePoint& rates, int k, double a);

// Exact outage probability of user k under the cascade when the served
// rates lie strictly inside the region certified by `alloc`. The event
// "all layers from the weakest down to user k decode" is a single
// threshold event on the gain, so the probability is the fading CDF at
// the largest per-layer threshold. Throws std::domain_error when a rate
// is outside the region, where the cascade argument breaks down.
double analytic_outage(const SystemSpec& spec, const PowerAllocation& alloc,
                       const RatePoint& rates, int k);

struct UserMcResult {
    std::int64_t trials = 0;
    std::int64_t outages = 0;
    double estimate = 0.0;
    double ci_low = 0.0;   // Wilson 95% score interval
    double ci_high = 0.0;
    std::int64_t indicator_violations = 0;  // cascades not in suffix form
};

struct McReport {
    std::uint64_t seed = 0;
    std::int64_t trials_per_user = 0;
    std::vector<UserMcResult> users;  // internal order
};

// Monte Carlo outage estimate for every user: draws gains from each
// user's own fading law (substream `k` of `seed`), runs the cascade, and
// counts failures to decode the own message. Deterministic in `seed`.
McReport mc_outage(const SystemSpec& spec, const PowerAllocation& alloc, const RatePoint& rates,
                   std::int64_t trials, std::uint64_t seed);

// Total indicator violations across users for the same draws mc_outage
// would use. Zero on sorted instances with in-region rates.
std::int64_t suffix_claim_check(const SystemSpec& spec, const PowerAllocation& alloc,
                                const RatePoint& rates, std::int64_t trials, std::uint64_t seed);

}  // namespace obc
