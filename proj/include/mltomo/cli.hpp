#pragma once

#include <string>
#include <vector>

namespace mltomo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitNoConvergence = 4;

/// Dispatches the generate / estimate / sweep / verify subcommands and maps
/// failures onto the stable exit codes above. MLQ_SEED, when set, overrides
/// any --seed flag.
int run(const std::vector<std::string> &args);

int run(int argc, char **argv);

} // namespace mltomo::cli
