#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace obc::cli {

// Command line front end. Subcommands: quantile, region, bdpc-sweep,
// simulate, figure. JSON summaries go to `out`; CSV and SVG files go to
// the --out directory.
//
// Exit codes: 0 success; 1 usage, config, or input errors; 2 a violated
// soundness claim (a time-sharing point outside the superposition
// region, a decoding indicator that is not in suffix form, or an outage
// confidence bound above the user's tolerance).
int run(int argc, const char* const* argv, std::ostream& out);

// Same, for callers that hold the arguments (without the program name)
// as strings.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace obc::cli
