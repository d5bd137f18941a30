#pragma once

#include "heightzeta/arch.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>

namespace heightzeta::cli {

enum class OutputFormat { json, csv };

struct RunConfig {
  int threads = 1;
  arch::QuadratureConfig tolerances;
  OutputFormat output_format = OutputFormat::json;
  std::uint64_t seed = 0;
  // "seconds" fields are wall-clock and vary run to run; off for byte-stable output.
  bool timing = true;
  std::filesystem::path data_dir;
};

RunConfig default_run_config();

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // reproduce: a criterion did not pass
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUsage = 64;

/// Parses argv (argv[0] is the program name), runs one subcommand and writes
/// its result to `out`. Library errors become a JSON error object on `out`
/// with exit code 2; malformed command lines report on `err` with exit 64.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace heightzeta::cli
