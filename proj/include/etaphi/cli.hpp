#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace etaphi::cli {

enum class Command { Expand, Coeffs, Verify, Positivity, Nondecomp, Uniqueness, Scan };
enum class Format { Text, Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;  // a mathematical check came out false
inline constexpr int kExitUsage = 2;    // bad flags, domain errors, overflow

/// Environment variable consulted for n_max when --n-max is absent.
inline constexpr const char* kNMaxEnv = "ETAPHI_N_MAX";

struct RunConfig {
  Command command = Command::Expand;
  std::int64_t n_max = 0;
  std::optional<std::int64_t> h;
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> h_max;
  std::optional<std::string> spec;
  std::optional<std::string> corpus;
  Format format = Format::Text;
  std::optional<std::string> output;
  unsigned workers = 1;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string report;  // newline-terminated
};

RunResult run(const RunConfig& config);

/// Full entry point: argument parsing, run, output routing.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace etaphi::cli
