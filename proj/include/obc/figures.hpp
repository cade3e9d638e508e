#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "obc/regions.hpp"

namespace obc {

struct FigureBundle {
    std::vector<std::filesystem::path> csv_files;
    std::filesystem::path svg_file;
    // Filled for the figure that overlays both schemes.
    std::optional<ContainmentReport> containment;
};

// Builds one of the canned two-user case studies (rho = 20 dB, outage
// tolerance 0.01 per user) into `out_dir`:
//   fig2  superposition frontier vs the time-sharing frontier for
//         exponential gains with means 10 and 1,
//   fig4  superposition frontiers with two correlated receive antennas
//         per user (correlation 0, 0.5, 0.9) against one antenna,
//   fig5  superposition frontiers with 1, 2, 4 transmit antennas and the
//         power split evenly across them.
// Writes one CSV per curve plus an SVG overlay; `grid` controls the
// sweep resolution. Unknown names throw std::invalid_argument.
FigureBundle make_figure(const std::string& name, const std::filesystem::path& out_dir,
                         int grid = 401);

}  // namespace obc
