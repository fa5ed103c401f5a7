// The qrun commands as library calls: a RunConfig in, rendered output and an
// exit status out. Nothing here touches argv or the filesystem.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "krun/report.hpp"
#include "krun/verify.hpp"

namespace krun {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitBudget = 3 };

enum class Command { count, series, bivariate, verify, asym, sweep };
enum class OutputFormat { json, csv };
enum class AsymKind { pbar, p2, pklog, hk };

// Every default in one place. Flags override these; nothing else does
// (QRUN_THREADS only seeds the thread count when --threads is absent).
namespace defaults {
inline constexpr int k = 1;
inline constexpr int n = 10;                      // count: largest n
inline constexpr std::size_t order = 20;          // series / bivariate q-order
inline constexpr std::size_t x_order = 10;        // bivariate x-order
inline constexpr std::size_t budget = 10'000;     // largest n or q-order any command accepts
inline constexpr double tol = 1e-13;              // hk_numeric / quadrature tolerance
inline constexpr double eps = 0.1;                // sweep: largest eps
inline constexpr int sweep_steps = 5;             // sweep: number of eps halvings
inline const std::vector<double> asym_n{100, 1000, 10000};
inline const std::vector<double> asym_eps{0.1, 0.05, 0.02};
}  // namespace defaults

struct RunConfig {
  Command command = Command::count;
  int k = defaults::k;
  std::optional<int> n;
  std::optional<std::size_t> order;
  std::optional<std::size_t> x_order;
  Suite suite = Suite::all;
  std::optional<double> eps;
  double tol = defaults::tol;
  OutputFormat format = OutputFormat::json;
  std::string out;  // empty: stdout
  unsigned threads = 0;  // 0: keep the library default
  std::size_t budget = defaults::budget;
  /// count/series/bivariate: which generating function (gbar, gk, hk, lbar,
  /// phi, chi, fine, euler; not all apply to every command).
  std::string family = "gbar";
  AsymKind kind = AsymKind::pbar;
  /// Test mode: verify also runs a deliberately perturbed identity.
  bool inject_fault = false;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;  // rendered JSON or CSV
  std::string message; // diagnostics for stderr
};

std::optional<Command> parse_command(std::string_view name);
std::optional<AsymKind> parse_asym_kind(std::string_view name);

/// Throws UsageError for non-positive bounds or inapplicable options.
void validate(const RunConfig& cfg);

/// Builds the table for cfg. Throws UsageError, BudgetExceeded or
/// ConvergenceBudgetExceeded.
Table count_table(const RunConfig& cfg);
Table series_table(const RunConfig& cfg);
Table bivariate_table(const RunConfig& cfg);
Table asym_table(const RunConfig& cfg);
Table sweep_table(const RunConfig& cfg);
std::vector<VerificationReport> verify_reports(const RunConfig& cfg);

/// Runs the command and renders it; errors map to exit codes, never throw.
CommandResult execute(const RunConfig& cfg);

std::string render(const Table& t, OutputFormat f);

}  // namespace krun
