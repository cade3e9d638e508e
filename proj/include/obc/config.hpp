#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "obc/system.hpp"

namespace obc {

struct ConfigUser {
    std::string fading;  // textual fading form, see FadingModel::parse
    double epsilon = 0.01;
};

// One run's inputs: average SNR in dB, the users in the caller's
// declared order, and the shared sweep/simulation knobs.
struct RunConfig {
    double rho_db = 20.0;
    std::vector<ConfigUser> users;
    int grid = 401;
    std::int64_t mc_samples = 100000;
    std::uint64_t seed = 1;

    double rho_linear() const;

    // Parses every user's fading text and builds the sorted system.
    SystemSpec make_spec() const;

    // JSON object with keys rho_db, users, grid, mc_samples, seed.
    // from_json_text(to_json_text()) reproduces the config exactly.
    static RunConfig from_json_text(const std::string& text);
    std::string to_json_text() const;

    static RunConfig load(const std::string& path);
    void save(const std::string& path) const;
};

}  // namespace obc
