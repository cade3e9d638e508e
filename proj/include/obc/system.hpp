#pragma once

#include <Eigen/Core>

#include <vector>

#include "obc/fading.hpp"

namespace obc {

// A point in rate space, in nats per channel use, one entry per user.
using RatePoint = Eigen::VectorXd;

// Fractions of the total transmit power given to each user's layer.
// Entries lie in [0, 1] and sum to 1; the constructor accepts inputs
// whose sum is within 1e-9 of 1 and renormalizes, so downstream code can
// rely on an exact simplex point.
class PowerAllocation {
public:
    explicit PowerAllocation(Eigen::VectorXd gamma);

    static PowerAllocation uniform(int num_users);

    const Eigen::VectorXd& gamma() const { return gamma_; }
    double operator[](Eigen::Index k) const { return gamma_[k]; }
    Eigen::Index size() const { return gamma_.size(); }

private:
    Eigen::VectorXd gamma_;
};

// Time sharing schedule: user k transmits alone for a fraction mu[k] of
// the time at power boost eta[k]. mu is a simplex point and the average
// power sum(mu * eta) equals 1; both are validated to 1e-9 and stored in
// normalized form.
class TimeSharingPolicy {
public:
    TimeSharingPolicy(Eigen::VectorXd mu, Eigen::VectorXd eta);

    const Eigen::VectorXd& mu() const { return mu_; }
    const Eigen::VectorXd& eta() const { return eta_; }
    Eigen::Index size() const { return mu_.size(); }

private:
    Eigen::VectorXd mu_;
    Eigen::VectorXd eta_;
};

struct UserSpec {
    FadingModel fading;
    double epsilon;  // outage tolerance in (0, 1)
};

// An instance of the downlink problem: an average SNR and one fading
// model plus outage tolerance per user. Internally users are kept in
// decreasing order of the epsilon-quantile gain G_k = F_k^{-1}(eps_k),
// which is the order every rate formula in this library assumes; the
// permutation back to the caller's order is retained.
class SystemSpec {
public:
    // Sorts users by quantile gain, descending (ties keep caller order).
    SystemSpec(double rho, std::vector<UserSpec> users);

    // Keeps the caller's order even if unsorted. Exists so that the
    // consequences of a wrong order are observable; the rate formulas
    // are only meaningful on sorted instances.
    static SystemSpec with_declared_order(double rho, std::vector<UserSpec> users);

    double rho() const { return rho_; }
    int num_users() const { return static_cast<int>(users_.size()); }

    // Accessors below use internal (sorted) 0-based indices.
    const UserSpec& user(int k) const { return users_[static_cast<std::size_t>(k)]; }
    const FadingModel& fading(int k) const { return user(k).fading; }
    double epsilon(int k) const { return user(k).epsilon; }
    double gain(int k) const { return gains_[k]; }
    const Eigen::VectorXd& gains() const { return gains_; }

    bool is_sorted_order() const;

    // Caller position of internal user k, and the inverse map.
    int original_index(int k) const { return perm_[static_cast<std::size_t>(k)]; }
    int internal_index(int original) const { return inverse_[static_cast<std::size_t>(original)]; }

    // Reorder a per-user vector from caller order to internal order and
    // back.
    Eigen::VectorXd to_internal(const Eigen::VectorXd& in_caller_order) const;
    Eigen::VectorXd to_caller(const Eigen::VectorXd& in_internal_order) const;

private:
    SystemSpec(double rho, std::vector<UserSpec> users, bool sort);

    double rho_;
    std::vector<UserSpec> users_;
    Eigen::VectorXd gains_;
    std::vector<int> perm_;     // internal k -> caller index
    std::vector<int> inverse_;  // caller index -> internal k
};

}  // namespace obc
