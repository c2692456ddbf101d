#pragma once

// Command implementations behind the qschur binary. Kept in the library so
// tests can call them without spawning a process.

#include "qschur/suites.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace qschur {

struct RunConfig {
  int n = 2;
  int rank = 2;
  std::optional<int> window; // number of values; default 2n
  std::optional<int> lo;     // first value; default centred on [1, n]
  int band = 2;
  std::string format = "json"; // json | csv | dot
  std::optional<std::filesystem::path> cache_dir;
  PsiReading psi = PsiReading::matrix_degree;
  CommutatorForm commutator = CommutatorForm::next_difference;
  int threads = 0;
  int span_length = 6;
  std::string flag;   // --p
  std::string matrix; // --s

  int window_lo() const;
  int window_hi() const;
  SuiteConfig suite_config() const;
};

/// Exit codes: 0 ok, 1 failure / counterexample, 2 bad input, 3 cap exceeded.
struct CommandResult {
  int exit_code = 0;
  std::string output;
  std::string error;
};

std::vector<std::string> compute_entities();
CommandResult compute_command(const std::string& entity, const RunConfig& c);
/// name is a suite name or "all".
CommandResult suite_command(const std::string& name, const RunConfig& c);

/// --cache-dir, else $QSCHUR_CACHE, else none.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::filesystem::path>& flag);

} // namespace qschur
