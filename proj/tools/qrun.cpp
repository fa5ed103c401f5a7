// qrun: tables, identity checks and asymptotic studies for k-run
// overpartitions. See README.md for the commands.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "krun/commands.hpp"

using namespace krun;

int main(int argc, char** argv) {
  CLI::App app{"k-run overpartition tables, identity checks and asymptotics"};
  app.set_version_flag("--version", "qrun 1.0");

  RunConfig cfg;
  std::string command;
  std::string suite = "all";
  std::string format = "json";
  std::string kind = "pbar";
  int n = 0;
  std::size_t order = 0, x_order = 0;
  double eps = 0;

  app.add_option("command", command, "count | series | bivariate | verify | asym | sweep")->required();
  app.add_option("--k", cfg.k, "run length k")->capture_default_str();
  auto* n_opt = app.add_option("--n", n, "count: largest n; asym: evaluation point; verify: oracle size; sweep: steps");
  auto* order_opt = app.add_option("--order", order, "q truncation order");
  auto* x_opt = app.add_option("--x-order", x_order, "x truncation order (bivariate, verify qdiff)");
  app.add_option("--suite", suite, "bijection | qdiff | lambda | fine | phi | chi | gk | all")->capture_default_str();
  auto* eps_opt = app.add_option("--eps", eps, "asym hk: evaluation point; sweep: first eps");
  app.add_option("--tol", cfg.tol, "numerical tolerance")->capture_default_str();
  app.add_option("--format", format, "json | csv")->capture_default_str();
  app.add_option("--out", cfg.out, "output path (default stdout)");
  app.add_option("--threads", cfg.threads, "worker threads for the series kernels");
  app.add_option("--budget", cfg.budget, "largest n / order accepted")->capture_default_str();
  app.add_option("--family", cfg.family, "gbar | gk | hk | lbar | phi | chi | fine | euler")->capture_default_str();
  app.add_option("--kind", kind, "asym: pbar | p2 | pklog | hk")->capture_default_str();
  app.add_flag("--inject-fault", cfg.inject_fault, "verify: add a deliberately broken identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const auto cmd = parse_command(command);
  const auto st = parse_suite(suite);
  const auto ak = parse_asym_kind(kind);
  if (!cmd || !st || !ak || (format != "json" && format != "csv")) {
    std::cerr << "usage: unknown " << (!cmd ? "command '" + command + "'" : !st ? "suite '" + suite + "'"
                                       : !ak ? "kind '" + kind + "'" : "format '" + format + "'")
              << "\n";
    return kExitUsage;
  }
  cfg.command = *cmd;
  cfg.suite = *st;
  cfg.kind = *ak;
  cfg.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
  if (*n_opt) cfg.n = n;
  if (*order_opt) cfg.order = order;
  if (*x_opt) cfg.x_order = x_order;
  if (*eps_opt) cfg.eps = eps;

  const CommandResult res = execute(cfg);
  std::cerr << res.message;
  if (!res.output.empty()) {
    if (cfg.out.empty()) {
      std::cout << res.output;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      f << res.output;
      if (!f) {
        std::cerr << "cannot write " << cfg.out << "\n";
        return kExitUsage;
      }
    }
  }
  return res.exit_code;
}
