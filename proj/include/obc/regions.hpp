#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

#include "obc/system.hpp"

namespace obc {

// Rates in nats achieved by superposition with successive decoding when
// user k's layer gets the fraction gamma[k] of the power and every user
// is served the whole time. Entries follow the spec's internal (sorted)
// user order. This is the boundary point of the outage region that the
// allocation certifies.
RatePoint star_rate(const SystemSpec& spec, const PowerAllocation& alloc);

// Rates achieved by time sharing: user k alone for a fraction mu[k] of
// the time at power boost eta[k].
RatePoint td_rate(const SystemSpec& spec, const TimeSharingPolicy& policy);

// Minimal power certificate for a target rate point (internal order):
// peels users strongest-first, assigning each layer exactly the power
// that meets its rate on top of the layers already assigned. Returns the
// allocation (leftover power folded into the last user) when the total
// stays within 1e-9 of the budget, std::nullopt when the target is
// outside the region.
std::optional<PowerAllocation> star_membership(const SystemSpec& spec, const RatePoint& target);

enum class FrontierScheme { star, time_sharing };

struct FrontierPoint {
    Eigen::VectorXd params;  // scheme parameters that achieve `rate`
    RatePoint rate;
};

// A swept, pruned achievability frontier. Points are mutually
// non-dominated (no point is componentwise <= another with one strict
// inequality) and sorted by rate[0] ascending.
struct Frontier {
    FrontierScheme scheme;
    std::vector<std::string> param_names;
    std::vector<FrontierPoint> points;
};

// Removes dominated and duplicate points, then sorts by rate[0].
void prune_dominated(std::vector<FrontierPoint>& points);

// Sweeps power splits on a simplex grid with `grid` points per axis and
// returns the pruned frontier. Supports 1 to 3 users; the sweep cost and
// retained set grow with the square of the grid for 3 users, so keep the
// grid modest there. Higher user counts are served by star_membership.
Frontier star_frontier(const SystemSpec& spec, int grid);

// Sweeps two-user time-sharing schedules: `grid` time fractions, and for
// each a geometric power-boost grid (1e-3 up to the budget limit) plus
// the no-boost point eta = 1, which carries the schedules that matter
// when gains are equal.
Frontier td_frontier(const SystemSpec& spec, int grid);

// Piecewise-linear upper concave envelope of a two-user frontier.
// Both sweeps trace boundaries of convex regions, so the envelope is the
// faithful curve through the swept points; it is also what makes
// frontier-to-frontier gaps well defined between grid nodes.
class UpperEnvelope {
public:
    explicit UpperEnvelope(const Frontier& frontier);

    // Envelope height at rate[0] = r1, clamped to the end vertices
    // outside the swept range.
    double rate2_at(double r1) const;

    const std::vector<Eigen::Vector2d>& vertices() const { return vertices_; }

private:
    std::vector<Eigen::Vector2d> vertices_;  // hull vertices, rate[0] ascending
};

struct ContainmentReport {
    int points_checked = 0;
    int membership_violations = 0;
    // Largest shortfall of the time-sharing envelope below the
    // superposition envelope at matched rate[0]; at matched first
    // coordinate this equals the sum-rate gap.
    double max_sum_rate_gap = 0.0;
};

// Verifies that every point of the swept time-sharing frontier is inside
// the superposition region, and measures how far the two envelopes sit
// apart. Two users only.
ContainmentReport containment_check(const SystemSpec& spec, int grid);

// CSV with one row per frontier point: the scheme parameters, then the
// rates, 9 significant digits.
std::string frontier_csv(const Frontier& frontier);

// Inverse of frontier_csv. Restores scheme and parameter names from the
// header; row order is preserved as written.
Frontier parse_frontier_csv(const std::string& text);

}  // namespace obc
