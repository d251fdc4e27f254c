#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace collabind::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

// Environment variable naming the default alias-map file.
inline constexpr const char* kAliasMapEnv = "COLLABIND_ALIAS_MAP";

// Entry point shared by the executable and tests. argv[0] is the program
// name. Results go to `out` unless --out/--out-dir is given; diagnostics and
// machine-readable errors go to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace collabind::cli
