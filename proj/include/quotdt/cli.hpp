#pragma once

// Command layer behind the quotdt executable: configuration merging, command
// dispatch, and report rendering (table or JSON).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace quotdt::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvariant = 2,
  kExitOracleMismatch = 3,
};

/// Every field is optional so that a config file and command-line flags can
/// be layered; flags win.
struct RunConfig {
  std::optional<std::string> command;
  std::optional<std::string> space;
  std::vector<std::string> charts;        // "a1,a2,a3;b1,b2,b3;c1,c2,c3" per chart
  std::optional<std::string> bundle;      // "O,O1" or "O(1,0),O(0,1)"
  std::vector<std::string> bundle_charts; // "m;m;..." per chart, one triple per colour
  std::optional<int> nmax;
  std::optional<int> rank;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<std::string> format;
  std::optional<unsigned> threads;
  std::optional<std::string> point;       // "i,j,k;i,j,k|i,j,k" colours separated by '|'
  std::optional<int> chart_index;
  std::optional<std::string> builtin;
  std::optional<std::string> lambda;
  std::optional<bool> timing;

  /// Fills unset fields of *this from `base`.
  void merge_defaults_from(const RunConfig& base);
};

/// Parses flat key=value lines; '#' starts a comment; list keys may repeat.
RunConfig parse_config_text(const std::string& text);
RunConfig load_config_file(const std::string& path);

struct CommandResult {
  nlohmann::ordered_json report;
  std::string table;
  int exit_code = kExitOk;

  std::string render(const std::string& format) const;
};

/// Runs one command. Engine errors are folded into the report and exit code;
/// only malformed configurations throw.
CommandResult run_command(const RunConfig& config);

const std::vector<std::string>& command_names();

}  // namespace quotdt::cli
