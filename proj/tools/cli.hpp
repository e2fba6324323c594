#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lls/classifier.hpp"

namespace lls::cli {

enum class Command { Validate, Connect, Construct, Dim, Enumerate, Verify, Classify };
enum class Format { Text, Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // counterexample found, or --expect-open failed
inline constexpr int kExitInvalid = 2;   // usage error or invalid input

struct CliConfig {
  Command command = Command::Validate;
  std::string pairInput;    // inline JSON or a file path
  std::string tripleInput;  // inline JSON or a file path
  std::optional<int> r;
  std::optional<int> d;
  int g = 0;
  NonemptyPolicy policy = kDefaultPolicy;
  Format format = Format::Text;
  int budget = 8;
  unsigned parallel = 1;
  bool trace = false;
  bool expectOpen = false;
};

/// Thrown by parse_args; the message names the offending flag.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for --help; carries the help text.
struct HelpRequested {
  std::string text;
};

/// Reads LLS_BUDGET from the environment for the default budget.
CliConfig parse_args(const std::vector<std::string>& args);

int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, mapping usage errors to exit code 2.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lls::cli
