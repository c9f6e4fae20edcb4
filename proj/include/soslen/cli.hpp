#pragma once

// Command-line front end. run() is the whole program minus process setup, so
// tests drive it with in-memory streams.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace soslen::cli {

enum ExitCode : int {
  kOk = 0,
  kFalse = 1,
  kInconclusive = 2,
  kCertificationFailure = 3,
  kUsage = 4,
  kInternal = 5,
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& text);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace soslen::cli
