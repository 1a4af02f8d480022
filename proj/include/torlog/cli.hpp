#ifndef TORLOG_CLI_HPP
#define TORLOG_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "torlog/json_io.hpp"

namespace torlog::cli {

enum class Command {
  check,
  betti,
  laplacian,
  torsion,
  reidemeister,
  euler,
  k1_torsion,
  fred_index,
  fred_verify,
  verify,
  glue_compose,
};

/// Subcommand name as typed on the command line ("k1-torsion", ...).
std::string command_name(Command c);

struct RunConfig {
  Command command = Command::check;
  std::vector<std::string> inputs;  // "-" is stdin
  std::vector<Scalar> beta;
  std::optional<Scalar> a, b;
  std::optional<std::size_t> trials;
  std::uint64_t seed = 1;
  std::string suite;
  Scalar base = 2;
  std::string output;  // empty: stdout
  bool approx = false;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failed = 1;  // a verification ran and found a failure
inline constexpr int usage = 2;
inline constexpr int io = 3;
inline constexpr int domain = 4;
}  // namespace exit_code

/// Bad command line. `help` is set for --help, which is not an error.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& what, int code, bool help = false)
      : std::runtime_error(what), code_(code), help_(help) {}
  int code() const { return code_; }
  bool help() const { return help_; }

 private:
  int code_;
  bool help_;
};

/// Throws UsageError. Malformed rationals in --beta, --A, --B, --base are usage errors.
RunConfig parse_args(const std::vector<std::string>& args);

struct RunResult {
  int code = exit_code::ok;
  Json report;
};

/// Reads inputs, dispatches, and builds the report. Never throws for bad
/// input: errors come back as {"error": {"kind", "message"}} with exit 2, 3 or 4.
RunResult run(const RunConfig& config, std::istream& in);

/// Whole program: parse, run, write the report (compact JSON plus newline)
/// to `out` or the -o file. Messages go to `err`.
int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace torlog::cli

#endif  // TORLOG_CLI_HPP
