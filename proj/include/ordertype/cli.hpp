#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace otype::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitInputError = 4;
inline constexpr int kExitSolvableTarget = 5;

enum class Format { Csv, Json };

struct RunConfig {
  std::string catalog_path;
  std::string command;
  std::string selector;
  Format format = Format::Csv;
  std::string out_path;  // empty: write to the output stream
  std::uint64_t max_multiplicity = 8;
  double screen_tolerance = 1e-10;
  std::size_t enum_cap = 10'000;
};

/// Runs one command. `args` excludes the program name. Results go to `out`
/// (or --out), diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace otype::cli
