#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace polytoric::cli {

enum class Format { Json, Tsv, Svg };

struct Command {
  std::string verb;
  std::vector<std::filesystem::path> inputs;
  Format format = Format::Json;
  std::optional<std::filesystem::path> out;  // svg destination; stdout when empty

  std::int64_t k = 0;
  bool verify = false;
  std::int64_t k_max = 10;
  std::optional<std::string> eps;

  std::int64_t count = 10000;
  std::uint64_t seed = 0;
  std::int64_t box = 6;
  std::int64_t points = 5;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitVerification = 2;

/// Default output format, from POLYTORIC_FORMAT when set.
Format default_format();

/// Parses argv-style arguments (without the program name). Returns the exit
/// code to use instead when parsing fails or help was requested.
struct ParseOutcome {
  std::optional<Command> command;
  int exit_code = kExitOk;
};
ParseOutcome parse_command(const std::vector<std::string>& args, std::ostream& out,
                           std::ostream& err);

int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_command + run.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polytoric::cli
