#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace akh::cli {

enum class Command { validate, identities, diamond, betti, lefschetz, obstructions, report };
enum class Format { text, json };

struct RunConfig {
  Command command = Command::report;
  std::optional<std::string> model_path;
  std::optional<std::string> catalog;
  Format format = Format::text;
  int verbosity = 0;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitObstruction = 2;

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses a command line (argv[0] is the program name) and runs it.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace akh::cli
