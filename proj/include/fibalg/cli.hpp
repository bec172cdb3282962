#pragma once

// Command-line front end: validate .fib files, run the constructions, and
// expose the bundled example catalog. The whole CLI is a pure function of
// (argv, stdin) so the test suite can drive it in-process.

#include <string>
#include <vector>

namespace fibalg::cli {

// Exit codes: 0 ok, 1 usage, 2 parse failure, 3 validation failure,
// 4 construction failure.
struct RunResult {
  int exit_code = 0;
  std::string output;  // exactly what goes to stdout
  std::string report_json;  // the machine report (also printed with --json)
};

RunResult run(const std::vector<std::string>& args,
              const std::string* stdin_data = nullptr);

const std::vector<std::string>& example_names();

/// Canonical .fib text of a catalog entry; throws Error on unknown names.
std::string emit_example(const std::string& name);

}  // namespace fibalg::cli
