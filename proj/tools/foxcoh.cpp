// foxcoh <command> <manifest.json> [args...] [--flavor F] [--json PATH] [--check] [--quotient]

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "foxcoh/cli.hpp"
#include "foxcoh/error.hpp"

namespace {

int emit(const nlohmann::ordered_json& report, const std::string& json_path, int exit_code) {
  const std::string text = report.dump(2) + "\n";
  if (json_path == "-") {
    std::cout << text;
    return exit_code;
  }
  std::ofstream out(json_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << json_path << "\n";
    return 2;
  }
  out << text;
  return exit_code;
}

// Value of --json when the command line could not be parsed as a whole.
std::string raw_json_path(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--json" && i + 1 < argc) return argv[i + 1];
    if (arg.rfind("--json=", 0) == 0) return arg.substr(7);
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted cohomology H0/H1 of finitely presented groups in sp(2,1), u(2,1), su(2,1)"};
  app.set_version_flag("--version", std::string(foxcoh::kVersion));

  std::string command;
  std::string manifest_path;
  std::vector<std::string> arguments;
  std::string flavor = "";
  std::string json_path;
  foxcoh::RunOptions options;

  app.add_option("command", command, "verify | h1 | centralizer | abelianization | fox")
      ->required()
      ->check(CLI::IsMember({"verify", "h1", "centralizer", "abelianization", "fox"}));
  app.add_option("manifest", manifest_path, "manifest JSON file")->required();
  app.add_option("args", arguments, "centralizer: <word>; fox: <generator> <relator-index>");
  app.add_option("--flavor", flavor, "sp21 | u21 | su21 | m | all (default: manifest flavors)")
      ->check(CLI::IsMember({"sp21", "u21", "su21", "m", "all"}));
  app.add_option("--json", json_path, "write the JSON report to PATH ('-' for stdout)");
  app.add_flag("--check", options.check, "compare against the manifest's expected values");
  app.add_flag("--quotient", options.quotient, "also use the manifest's quotient presentation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const std::string path = raw_json_path(argc, argv);
    if (path.empty() || e.get_exit_code() == 0) return app.exit(e) == 0 ? 0 : 2;
    nlohmann::ordered_json report = {{"tool", "foxcoh"}, {"version", foxcoh::kVersion}, {"status", "error"}};
    report["error"] = {{"code", foxcoh::error_code_name(foxcoh::ErrorCode::InvalidInput)}, {"message", e.what()}};
    return emit(report, path, 2);
  }

  if (flavor == "all") {
    options.flavors = {foxcoh::Flavor::sp21, foxcoh::Flavor::u21, foxcoh::Flavor::su21, foxcoh::Flavor::m};
  } else if (!flavor.empty()) {
    options.flavors = {*foxcoh::parse_flavor(flavor)};
  }
  options.arguments = arguments;

  const foxcoh::RunResult result = foxcoh::run_file(manifest_path, command, options);
  if (json_path.empty()) {
    (result.exit_code == 2 ? std::cerr : std::cout) << result.summary;
    return result.exit_code;
  }
  return emit(result.report, json_path, result.exit_code);
}
