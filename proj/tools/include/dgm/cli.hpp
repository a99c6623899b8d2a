#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dgm::cli {

inline constexpr int kSuccess = 0;
inline constexpr int kFinding = 1;     ///< verification failed, obstructed or stuck
inline constexpr int kInputError = 2;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dgm::cli
