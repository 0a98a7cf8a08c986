#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace gsheaf::cli {

enum class Format { Text, Structured };

struct Command {
  std::string subcommand;
  std::optional<std::string> input_path;
  Format format = Format::Text;
  std::optional<std::uint64_t> seed;
  std::optional<long> c;
  std::optional<long> s;
};

/// Exit status 0 on success, 1 on a mathematical validation error, 2 on a
/// file or parse error. `report` holds the text or JSON report on success
/// and the diagnostic otherwise.
struct Outcome {
  int status = 0;
  std::string report;
};

Outcome run(const Command& command);

/// Argument parsing front end; writes the report to `out` or the diagnostic to `err`.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace gsheaf::cli
