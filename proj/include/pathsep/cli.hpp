#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pathsep::cli {

inline constexpr std::uint64_t kDefaultSeed = 20231117;

// Runs one subcommand. Returns 0 on success, 1 on a domain error (error name
// on `err`) and 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathsep::cli
