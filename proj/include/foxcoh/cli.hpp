#pragma once

// Command dispatch shared by the foxcoh executable and the tests.
//
// Commands: verify, h1, centralizer <word>, abelianization,
// fox <generator> <relator-index>. Exit codes: 0 success, 1 verification
// or --check failure, 2 input error.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "foxcoh/error.hpp"
#include "foxcoh/manifest.hpp"

namespace foxcoh {

inline constexpr std::string_view kVersion = "1.0.0";

struct RunOptions {
  /// Empty means the manifest's flavor list (sp21 only for centralizer).
  std::vector<Flavor> flavors;
  bool check = false;
  /// h1 also runs the quotient presentation; abelianization and fox use it.
  bool quotient = false;
  /// Command arguments after the manifest path.
  std::vector<std::string> arguments;
};

struct RunResult {
  int exit_code = 0;
  nlohmann::ordered_json report;
  std::string summary;
};

RunResult run(const Manifest& manifest, std::string_view command, const RunOptions& options);
/// Loads the manifest first; load failures become exit code 2 reports.
RunResult run_file(const std::filesystem::path& manifest_path, std::string_view command, const RunOptions& options);

/// Exit code for an error that aborts a command.
int exit_code_for(ErrorCode code);

}  // namespace foxcoh
