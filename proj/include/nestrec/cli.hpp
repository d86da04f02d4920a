#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nestrec::cli {

inline constexpr int kOk = 0;
inline constexpr int kDomainFailure = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line. args[0] is the program name. Primary output goes
/// to `out` (or --out FILE), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nestrec::cli
