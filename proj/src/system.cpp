#include "obc/system.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace obc {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

PowerAllocation::PowerAllocation(Eigen::VectorXd gamma) : gamma_(std::move(gamma)) {
    require(gamma_.size() >= 1, "power allocation: need at least one user");
    for (Eigen::Index k = 0; k < gamma_.size(); ++k) {
        require(std::isfinite(gamma_[k]), "power allocation: entries must be finite");
        require(gamma_[k] >= -1e-12 && gamma_[k] <= 1.0 + 1e-12,
                "power allocation: entries must lie in [0, 1]");
        gamma_[k] = std::clamp(gamma_[k], 0.0, 1.0);
    }
    const double sum = gamma_.sum();
    require(std::abs(sum - 1.0) <= 1e-9, "power allocation: entries must sum to 1");
    gamma_ /= sum;
}

PowerAllocation PowerAllocation::uniform(int num_users) {
    require(num_users >= 1, "power allocation: need at least one user");
    return PowerAllocation(
        Eigen::VectorXd::Constant(num_users, 1.0 / static_cast<double>(num_users)));
}

TimeSharingPolicy::TimeSharingPolicy(Eigen::VectorXd mu, Eigen::VectorXd eta)
    : mu_(std::move(mu)), eta_(std::move(eta)) {
    require(mu_.size() >= 1, "time sharing: need at least one user");
    require(mu_.size() == eta_.size(), "time sharing: mu and eta must have equal length");
    for (Eigen::Index k = 0; k < mu_.size(); ++k) {
        require(std::isfinite(mu_[k]) && std::isfinite(eta_[k]),
                "time sharing: entries must be finite");
        require(mu_[k] >= -1e-12 && mu_[k] <= 1.0 + 1e-12,
                "time sharing: mu entries must lie in [0, 1]");
        mu_[k] = std::clamp(mu_[k], 0.0, 1.0);
        require(eta_[k] >= 0.0, "time sharing: eta entries must be >= 0");
    }
    const double mu_sum = mu_.sum();
    require(std::abs(mu_sum - 1.0) <= 1e-9, "time sharing: mu must sum to 1");
    mu_ /= mu_sum;
    const double avg_power = mu_.dot(eta_);
    require(std::abs(avg_power - 1.0) <= 1e-9, "time sharing: average power must equal 1");
    eta_ /= avg_power;
}

SystemSpec::SystemSpec(double rho, std::vector<UserSpec> users)
    : SystemSpec(rho, std::move(users), /*sort=*/true) {}

SystemSpec SystemSpec::with_declared_order(double rho, std::vector<UserSpec> users) {
    return SystemSpec(rho, std::move(users), /*sort=*/false);
}

SystemSpec::SystemSpec(double rho, std::vector<UserSpec> users, bool sort)
    : rho_(rho), users_(std::move(users)) {
    require(std::isfinite(rho_) && rho_ > 0.0, "system: rho must be positive");
    require(!users_.empty(), "system: need at least one user");
    for (const UserSpec& u : users_)
        require(u.epsilon > 0.0 && u.epsilon < 1.0, "system: epsilon must lie in (0, 1)");

    const auto n = users_.size();
    std::vector<double> g(n);
    for (std::size_t k = 0; k < n; ++k) g[k] = users_[k].fading.quantile(users_[k].epsilon);

    perm_.resize(n);
    std::iota(perm_.begin(), perm_.end(), 0);
    if (sort) {
        std::stable_sort(perm_.begin(), perm_.end(),
                         [&](int a, int b) { return g[static_cast<std::size_t>(a)] >
                                                    g[static_cast<std::size_t>(b)]; });
    }

    std::vector<UserSpec> ordered;
    ordered.reserve(n);
    gains_.resize(static_cast<Eigen::Index>(n));
    inverse_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto src = static_cast<std::size_t>(perm_[k]);
        ordered.push_back(std::move(users_[src]));
        gains_[static_cast<Eigen::Index>(k)] = g[src];
        inverse_[src] = static_cast<int>(k);
    }
    users_ = std::move(ordered);
}

bool SystemSpec::is_sorted_order() const {
    for (Eigen::Index k = 1; k < gains_.size(); ++k)
        if (gains_[k - 1] < gains_[k]) return false;
    return true;
}

Eigen::VectorXd SystemSpec::to_internal(const Eigen::VectorXd& in_caller_order) const {
    require(in_caller_order.size() == gains_.size(), "system: vector length mismatch");
    Eigen::VectorXd out(gains_.size());
    for (Eigen::Index k = 0; k < out.size(); ++k) out[k] = in_caller_order[perm_[k]];
    return out;
}

Eigen::VectorXd SystemSpec::to_caller(const Eigen::VectorXd& in_internal_order) const {
    require(in_internal_order.size() == gains_.size(), "system: vector length mismatch");
    Eigen::VectorXd out(gains_.size());
    for (Eigen::Index k = 0; k < out.size(); ++k) out[perm_[k]] = in_internal_order[k];
    return out;
}

}  // namespace obc
