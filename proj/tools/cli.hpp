#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace perron::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidity = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitUsage = 64;

/// Runs one command. `args` excludes the program name. JSON lines go to
/// `out`; diagnostics and usage text go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace perron::cli
