#pragma once

#include "bubbles/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bubbles::cli {

inline constexpr int kDefaultOrder = 64;
inline constexpr int kMinOrder = 8;

enum ExitCode : int {
  kExitOk = 0,
  /// Identity-suite failure, oracle disagreement or internal cross-check failure.
  kExitFailure = 1,
  /// Malformed input or invalid arguments.
  kExitUsage = 2,
  /// Bubble data given as a truncated series whose hat closure is not polynomial.
  kExitInconsistent = 3,
};

struct Options {
  /// Overrides the document's "order"; both default to kDefaultOrder.
  std::optional<int> order;
  bool oracle = false;
  /// Injects a fault into the identity suite.
  bool corrupt = false;
  /// Worker threads for the identity suite; 0 picks the hardware count.
  unsigned threads = 0;
};

struct Outcome {
  int exit_code = kExitOk;
  io::Json report;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"brauer classify", "brauer omega",     "brauer check",
                                              "kauffman classify", "kauffman series", "suite"};
  return names;
}

/// Runs one command on a parsed input document. Never throws: errors become
/// reports with an "error" field and the matching exit code.
Outcome run(const std::string& command, const io::Json& input, const Options& options);
/// As run, parsing the document from text first (empty text is an empty object).
Outcome run_text(const std::string& command, const std::string& input, const Options& options);

std::string render_json(const Outcome& outcome);
std::string render_text(const Outcome& outcome);

}  // namespace bubbles::cli
