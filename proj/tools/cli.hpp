#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rankone/groups.hpp"

namespace rankone::cli {

enum class Command { NormTable, Eval, Verify, Tree };
enum class Format { Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Thrown for invalid configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// lo:hi:steps, evenly spaced and inclusive; steps == 1 gives {lo}.
struct GridRange {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 1;

  static GridRange parse(const std::string& text);
  std::vector<double> values() const;
  std::string to_string() const;
};

struct RunConfig {
  Command command = Command::NormTable;
  groups::Family family = groups::Family::SO0;
  int n = 2;
  GridRange sigma{-0.5, 0.5, 11};
  GridRange t{0.0, 2.0, 5};
  std::vector<double> r{1.0};
  double tol = 1e-10;
  std::string out;  // empty: standard output
  std::optional<Format> format;  // unset: JSON for verify, CSV otherwise
  std::string free_product = "3,0";
  int radius = 4;
  std::optional<std::vector<std::string>> checks;  // unset: every check
  std::vector<std::string> methods;                // empty: every applicable method
  int jobs = 0;                                    // 0: hardware concurrency, at most 8
  double perturb_gamma = 0.0;

  /// Throws ConfigError on violated invariants.
  void validate() const;
};

Command parse_command(const std::string& name);
std::string to_string(Command command);
Format parse_format(const std::string& name);

/// Comma-separated list of doubles.
std::vector<double> parse_list(const std::string& text);

/// Overlays the keys present in a JSON config file onto `config`; returns
/// whether the file named the command.
bool apply_config_file(const std::string& path, RunConfig& config);

/// Parses argv (flags override the config file, which overrides defaults).
/// Returns std::nullopt after printing help; throws ConfigError otherwise.
std::optional<RunConfig> parse_arguments(int argc, const char* const* argv);

int cmd_norm_table(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_tree(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches, redirecting to config.out when set; ConfigError and library
/// errors become exit code 2.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point used by main.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Number of workers actually used for `requested` (0 = automatic).
int worker_count(int requested);

}  // namespace rankone::cli
