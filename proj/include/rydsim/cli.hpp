#pragma once

#include <string>
#include <vector>

// Command-line front end. Subcommands: two-level, forster, gate, bell,
// sweep, stark-map. Exit codes: 0 success, 2 configuration error,
// 3 numerical failure.

namespace rydsim::cli {

inline constexpr const char* kVersion = "rydsim 1.0.0";

int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args); // args without argv[0]

} // namespace rydsim::cli
