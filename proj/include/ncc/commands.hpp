#ifndef NCC_COMMANDS_HPP
#define NCC_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncc/numerics.hpp"

namespace ncc {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string algebra = "sl:2";
  std::string euler = "h";
  double eq_tol = 1e-9;
  double spec_tol = 1e-7;
  double band = 1e-6;
  std::uint64_t seed = 0;
  int samples = 1000;
  std::string output = "json";
  int grid = 100;
  double tmax = 20.0;

  Tolerances tolerances() const;
  nlohmann::json to_json() const;
};

struct CommandResult {
  int exit_code = 0;
  nlohmann::json report;
};

using Word = std::vector<std::pair<std::string, double>>;

/// Parses "z:0.5,h:-1" into a word of exponentials.
Word parse_word(const std::string& text);

CommandResult cmd_info(const RunConfig& cfg);
CommandResult cmd_wedge(const RunConfig& cfg, const Word& word);
CommandResult cmd_verify(const std::string& suite, const RunConfig& cfg);

/// JSON (pretty, key-sorted) or a flat two-column table.
std::string render(const nlohmann::json& report, const std::string& format);

/// Entry point of the command-line tool; returns the process exit code
/// (0 pass, 1 verification failure, 2 usage error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ncc

#endif  // NCC_COMMANDS_HPP
