#include "krun/commands.hpp"

#include <cmath>

#include "krun/asymptotics.hpp"
#include "krun/enumeration.hpp"
#include "krun/qgen.hpp"

namespace krun {

namespace {

void require_budget(std::size_t v, std::size_t budget, const char* what) {
  if (v > budget) {
    throw BudgetExceeded(std::string(what) + " " + std::to_string(v) + " exceeds the budget " +
                         std::to_string(budget));
  }
}

std::size_t count_n(const RunConfig& cfg) { return static_cast<std::size_t>(cfg.n.value_or(defaults::n)); }

Table two_column(const char* value_name, const IntSeries& s) {
  Table t;
  t.columns = {{"n", ColumnKind::integer}, {value_name, ColumnKind::integer}};
  for (std::size_t i = 0; i <= s.order(); ++i) t.add_row({BigInt(static_cast<unsigned long>(i)), s[i]});
  return t;
}

Table ratio_table() {
  Table t;
  t.columns = {{"point", ColumnKind::real},
               {"exact_log", ColumnKind::real},
               {"asym_log", ColumnKind::real},
               {"ratio", ColumnKind::real}};
  return t;
}

std::vector<double> asym_points(const RunConfig& cfg) {
  if (cfg.kind == AsymKind::hk) return cfg.eps ? std::vector<double>{*cfg.eps} : defaults::asym_eps;
  return cfg.n ? std::vector<double>{static_cast<double>(*cfg.n)} : defaults::asym_n;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  if (name == "count") return Command::count;
  if (name == "series") return Command::series;
  if (name == "bivariate") return Command::bivariate;
  if (name == "verify") return Command::verify;
  if (name == "asym") return Command::asym;
  if (name == "sweep") return Command::sweep;
  return std::nullopt;
}

std::optional<AsymKind> parse_asym_kind(std::string_view name) {
  if (name == "pbar") return AsymKind::pbar;
  if (name == "p2") return AsymKind::p2;
  if (name == "pklog") return AsymKind::pklog;
  if (name == "hk") return AsymKind::hk;
  return std::nullopt;
}

void validate(const RunConfig& cfg) {
  if (cfg.k < 1) throw UsageError("--k must be positive");
  if (cfg.n && *cfg.n < 0) throw UsageError("--n must be non-negative");
  if (cfg.order && *cfg.order == 0) throw UsageError("--order must be positive");
  if (cfg.x_order && *cfg.x_order == 0) throw UsageError("--x-order must be positive");
  if (cfg.eps && !(*cfg.eps > 0.0)) throw UsageError("--eps must be positive");
  if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
  if (cfg.budget == 0) throw UsageError("--budget must be positive");
  if (cfg.command == Command::asym && cfg.kind == AsymKind::pklog && cfg.k < 2) {
    throw UsageError("--kind pklog needs --k >= 2");
  }
  if (cfg.command == Command::count && cfg.family != "gbar" && cfg.family != "gk") {
    throw UsageError("count supports --family gbar or gk");
  }
  if (cfg.command == Command::count && cfg.family == "gk" && cfg.k < 2) {
    throw UsageError("--family gk needs --k >= 2");
  }
  if (cfg.command == Command::bivariate && cfg.family != "gbar" && cfg.family != "lbar") {
    throw UsageError("bivariate supports --family gbar or lbar");
  }
}

Table count_table(const RunConfig& cfg) {
  const std::size_t n = count_n(cfg);
  require_budget(n, cfg.budget, "n");
  if (cfg.family == "gk") return two_column("p", gk_series(cfg.k, n));
  return two_column("pbar", gbar_series(cfg.k, n));
}

Table series_table(const RunConfig& cfg) {
  const std::size_t order = cfg.order.value_or(defaults::order);
  require_budget(order, cfg.budget, "order");
  const std::string& f = cfg.family;
  if (f == "gbar") return two_column("coeff", gbar_series(cfg.k, order));
  if (f == "gk") {
    if (cfg.k < 2) throw UsageError("--family gk needs --k >= 2");
    return two_column("coeff", gk_series(cfg.k, order));
  }
  if (f == "hk") return two_column("coeff", hk_series(cfg.k, order));
  if (f == "phi") return two_column("coeff", phi_series(order));
  if (f == "chi") return two_column("coeff", chi_series(order));
  if (f == "fine") return two_column("coeff", fine_bracket_series(order));
  if (f == "euler") return two_column("coeff", euler_inverse(order));
  throw UsageError("unknown --family '" + f + "' (gbar, gk, hk, phi, chi, fine, euler)");
}

Table bivariate_table(const RunConfig& cfg) {
  const std::size_t order = cfg.order.value_or(defaults::order);
  const std::size_t x_order = cfg.x_order.value_or(defaults::x_order);
  require_budget(order, cfg.budget, "order");
  require_budget(x_order, cfg.budget, "x-order");
  const BiSeries s = cfg.family == "lbar" ? lbar_bivariate(cfg.k, x_order, order) : gbar_bivariate(cfg.k, x_order, order);
  Table t;
  t.columns = {{"parts", ColumnKind::integer}, {"n", ColumnKind::integer}, {"coeff", ColumnKind::integer}};
  for (std::size_t m = 0; m <= x_order; ++m) {
    for (std::size_t i = 0; i <= order; ++i) {
      if (s.at(m, i) == 0) continue;
      t.add_row({BigInt(static_cast<unsigned long>(m)), BigInt(static_cast<unsigned long>(i)), s.at(m, i)});
    }
  }
  return t;
}

Table asym_table(const RunConfig& cfg) {
  const auto points = asym_points(cfg);
  Table t = ratio_table();
  if (cfg.kind == AsymKind::hk) {
    for (double eps : points) {
      const double exact = std::log(hk_numeric(cfg.k, eps, cfg.tol));
      const double asym = hk_asymptote(cfg.k, eps).log_value;
      t.add_row({eps, exact, asym, std::exp(exact - asym)});
    }
    return t;
  }
  double top = 0;
  for (double p : points) {
    if (!(p >= 1.0) || p != std::floor(p)) throw UsageError("asymptotic points must be positive integers");
    top = std::max(top, p);
  }
  const auto n_max = static_cast<std::size_t>(top);
  require_budget(n_max, cfg.budget, "n");
  IntSeries exact;
  switch (cfg.kind) {
    case AsymKind::pbar: exact = gbar_series(cfg.k, n_max); break;
    case AsymKind::p2: exact = gk_series(2, n_max); break;
    case AsymKind::pklog: exact = gk_series(cfg.k, n_max); break;
    case AsymKind::hk: break;
  }
  for (double p : points) {
    const double e = log_bigint(exact[static_cast<std::size_t>(p)]);
    switch (cfg.kind) {
      case AsymKind::pbar: {
        const double a = pbar_asymptote(cfg.k, p).log_value;
        t.add_row({p, e, a, std::exp(e - a)});
        break;
      }
      case AsymKind::p2: {
        const double a = p2_asymptote(p).log_value;
        t.add_row({p, e, a, std::exp(e - a)});
        break;
      }
      case AsymKind::pklog: {
        // Only the leading term is known, so compare the logs themselves.
        const double a = pk_log_asymptote(cfg.k, p);
        t.add_row({p, e, a, e / a});
        break;
      }
      case AsymKind::hk: break;
    }
  }
  return t;
}

Table sweep_table(const RunConfig& cfg) {
  const int steps = cfg.n.value_or(defaults::sweep_steps);
  if (steps < 1) throw UsageError("sweep needs --n >= 1");
  const ContourCalibration cal = calibrate_contour();
  QuadParams qp;
  qp.norm = cal.chosen;
  Table t;
  t.columns = {{"eps", ColumnKind::real},         {"numeric_log", ColumnKind::real},
               {"contour_log", ColumnKind::real}, {"asym_log", ColumnKind::real},
               {"ratio", ColumnKind::real},       {"contour_rel_diff", ColumnKind::real}};
  double eps = cfg.eps.value_or(defaults::eps);
  for (int i = 0; i < steps; ++i, eps /= 2) {
    const double asym = hk_asymptote(cfg.k, eps).log_value;
    const double contour = hk_contour(cfg.k, eps, qp);
    Cell numeric_log, ratio, rel;
    try {
      const double v = hk_numeric(cfg.k, eps, cfg.tol);
      numeric_log = std::log(v);
      ratio = std::exp(std::log(v) - asym);
      rel = std::abs(contour - v) / v;
    } catch (const ConvergenceBudgetExceeded&) {
      // Below the direct summation's working range the contour value stands alone.
    }
    t.add_row({eps, numeric_log, std::log(contour), asym, ratio, rel});
  }
  return t;
}

std::vector<VerificationReport> verify_reports(const RunConfig& cfg) {
  SuiteLimits lim;
  if (cfg.order) {
    require_budget(*cfg.order, cfg.budget, "order");
    lim.identity_order = *cfg.order;
  }
  if (cfg.n) {
    require_budget(static_cast<std::size_t>(*cfg.n), kEnumerationBound, "n");
    lim.oracle_n = *cfg.n;
    lim.bivariate_n = std::min(lim.bivariate_n, *cfg.n);
  }
  if (cfg.x_order) lim.qdiff_x_order = *cfg.x_order;
  auto reports = run_suite(cfg.suite, lim);
  if (cfg.inject_fault) {
    const std::size_t order = std::min<std::size_t>(lim.identity_order, 50);
    auto r = check_gbar1_fine(order, Perturbation{order / 2, 1});
    r.identity_name += "[fault]";
    reports.push_back(std::move(r));
  }
  return reports;
}

std::string render(const Table& t, OutputFormat f) {
  if (f == OutputFormat::csv) return table_to_csv(t);
  return table_to_json(t).dump(2) + "\n";
}

CommandResult execute(const RunConfig& cfg) {
  CommandResult res;
  try {
    validate(cfg);
    if (cfg.threads > 0) set_thread_count(cfg.threads);
    switch (cfg.command) {
      case Command::count: res.output = render(count_table(cfg), cfg.format); break;
      case Command::series: res.output = render(series_table(cfg), cfg.format); break;
      case Command::bivariate: res.output = render(bivariate_table(cfg), cfg.format); break;
      case Command::asym: res.output = render(asym_table(cfg), cfg.format); break;
      case Command::sweep: res.output = render(sweep_table(cfg), cfg.format); break;
      case Command::verify: {
        const auto reports = verify_reports(cfg);
        res.output = cfg.format == OutputFormat::csv ? table_to_csv(reports_table(reports))
                                                     : reports_to_json(reports).dump(2) + "\n";
        for (const auto& r : reports) {
          if (r.passed) continue;
          res.message += (r.informational ? "info: " : "FAILED: ") + r.identity_name +
                         (r.detail.empty() ? "" : " (" + r.detail + ")") + "\n";
          if (!r.informational) res.exit_code = kExitVerifyFailed;
        }
        break;
      }
    }
  } catch (const UsageError& e) {
    res = {kExitUsage, "", std::string("usage: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    res = {kExitUsage, "", std::string("usage: ") + e.what() + "\n"};
  } catch (const BudgetExceeded& e) {
    res = {kExitBudget, "", std::string("budget: ") + e.what() + "\n"};
  } catch (const ConvergenceBudgetExceeded& e) {
    res = {kExitBudget, "", std::string("budget: ") + e.what() + "\n"};
  }
  return res;
}

}  // namespace krun
