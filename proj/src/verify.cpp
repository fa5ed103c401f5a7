#include "krun/verify.hpp"

#include <set>

#include "krun/enumeration.hpp"

namespace krun {

namespace {

VerificationReport make_report(std::string name, int n_max) {
  VerificationReport r;
  r.identity_name = std::move(name);
  r.trunc_order = static_cast<std::size_t>(n_max);
  return r;
}

void fail(VerificationReport& r, int n, std::string detail, std::optional<BigInt> lhs = {},
          std::optional<BigInt> rhs = {}) {
  if (!r.passed) return;
  r.passed = false;
  r.first_mismatch = static_cast<std::size_t>(n);
  r.detail = std::move(detail);
  r.lhs_coeff = std::move(lhs);
  r.rhs_coeff = std::move(rhs);
}

std::string kname(const char* base, int k) { return std::string(base) + "(k=" + std::to_string(k) + ")"; }

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::bijection, Suite::qdiff, Suite::lambda, Suite::fine, Suite::phi, Suite::chi, Suite::gk,
                  Suite::all}) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::bijection: return "bijection";
    case Suite::qdiff: return "qdiff";
    case Suite::lambda: return "lambda";
    case Suite::fine: return "fine";
    case Suite::phi: return "phi";
    case Suite::chi: return "chi";
    case Suite::gk: return "gk";
    case Suite::all: return "all";
  }
  return "";
}

bool suite_is_gating(Suite s) { return s != Suite::phi; }

VerificationReport check_lower_upper_counts(int n_max, int k_max) {
  auto rep = make_report("lower_upper_counts", n_max);
  for (int k = 1; k <= k_max; ++k) {
    for (int n = 0; n <= n_max; ++n) {
      const long long lo = count_lower(n, k);
      const long long up = count_upper(n, k);
      if (lo != up) fail(rep, n, "k=" + std::to_string(k), BigInt(std::to_string(lo)), BigInt(std::to_string(up)));
    }
  }
  return rep;
}

VerificationReport check_shift_bijection(int n_max, int k_max) {
  auto rep = make_report("lower_to_upper_bijection", n_max);
  for (int k = 1; k <= k_max && rep.passed; ++k) {
    for (int n = 0; n <= n_max && rep.passed; ++n) {
      std::set<Overpartition> images;
      for_each_overpartition(n, [&](const Overpartition& op) {
        if (!rep.passed || !is_lower_k_run(op, k)) return;
        const Overpartition img = lower_to_upper(op, k);
        const std::string where = "k=" + std::to_string(k) + " at " + op.to_string();
        if (img.size() != op.size() || img.part_count() != op.part_count() ||
            img.overline_count() != op.overline_count()) {
          fail(rep, n, "statistics not preserved, " + where);
        } else if (!is_upper_k_run(img, k)) {
          fail(rep, n, "image not upper, " + where);
        } else if (upper_to_lower(img, k) != op) {
          fail(rep, n, "inverse shift does not recover, " + where);
        } else if (!images.insert(img).second) {
          fail(rep, n, "image collision, " + where);
        }
      });
      if (rep.passed && static_cast<long long>(images.size()) != count_upper(n, k)) {
        fail(rep, n, "not onto the upper class, k=" + std::to_string(k), BigInt(std::to_string(images.size())),
             BigInt(std::to_string(count_upper(n, k))));
      }
    }
  }
  return rep;
}

VerificationReport check_conjugation(int n_max) {
  auto rep = make_report("conjugation_involution", n_max);
  for (int n = 0; n <= n_max && rep.passed; ++n) {
    long long lower = 0;
    long long target = 0;
    for_each_overpartition(n, [&](const Overpartition& op) {
      if (!rep.passed) return;
      const Overpartition c = conjugate(op);
      if (c.size() != op.size() || conjugate(c) != op) {
        fail(rep, n, "not an involution at " + op.to_string());
        return;
      }
      if (is_lower_k_run(op, 1)) {
        ++lower;
        if (!is_conjugate_one_run_class(c)) fail(rep, n, "image outside the class at " + op.to_string());
      }
      target += is_conjugate_one_run_class(op);
    });
    // Injective (involution) plus equal counts makes the map onto.
    if (rep.passed && lower != target) {
      fail(rep, n, "class sizes differ", BigInt(std::to_string(lower)), BigInt(std::to_string(target)));
    }
  }
  return rep;
}

VerificationReport check_conjugation_example() {
  auto rep = make_report("conjugation_example", 13);
  const Overpartition left = Overpartition::parse("6' + 4' + 1 + 1 + 1'");
  const Overpartition right = Overpartition::parse("5' + 2 + 2 + 2' + 1 + 1'");
  if (!is_lower_k_run(left, 1)) fail(rep, 13, "example is not a lower 1-run overpartition");
  if (conjugate(left) != right) fail(rep, 13, "conjugate was " + conjugate(left).to_string());
  if (!is_conjugate_one_run_class(right)) fail(rep, 13, "conjugate outside the class");
  return rep;
}

VerificationReport check_mono_injections(int n_max, int k_max) {
  auto rep = make_report("monotonicity_injections", n_max);
  for (int k = 1; k <= k_max && rep.passed; ++k) {
    for (int n = 0; n <= n_max && rep.passed; ++n) {
      std::set<Overpartition> grow;
      std::set<Overpartition> shrink;
      for_each_overpartition(n, [&](const Overpartition& op) {
        if (!rep.passed) return;
        const std::string where = "k=" + std::to_string(k) + " at " + op.to_string();
        if (is_upper_k_run(op, k)) {
          const Overpartition img = mono_inject_n(op, k);
          if (img.size() != n + 1 || !is_upper_k_run(img, k)) fail(rep, n, "n-injection leaves the class, " + where);
          if (!grow.insert(img).second) fail(rep, n, "n-injection collision, " + where);
        }
        if (is_lower_k_run(op, k + 1)) {
          const Overpartition img = mono_inject_k(op, k);
          if (img.size() != n || !is_lower_k_run(img, k)) fail(rep, n, "k-injection leaves the class, " + where);
          if (!shrink.insert(img).second) fail(rep, n, "k-injection collision, " + where);
        }
      });
    }
  }
  return rep;
}

VerificationReport check_gbar_vs_enumeration(int k, int n_max) {
  const auto order = static_cast<std::size_t>(n_max);
  IntSeries counts(order);
  for (int n = 0; n <= n_max; ++n) counts[n] = BigInt(std::to_string(count_lower(n, k)));
  return compare_series(kname("gbar_vs_enumeration", k), gbar_series(k, order), counts);
}

VerificationReport check_gk_vs_enumeration(int k, int n_max) {
  const auto order = static_cast<std::size_t>(n_max);
  IntSeries counts(order);
  for (int n = 0; n <= n_max; ++n) counts[n] = BigInt(std::to_string(count_no_k_sequence(n, k)));
  return compare_series(kname("gk_vs_enumeration", k), gk_series(k, order), counts);
}

VerificationReport check_bivariate_vs_enumeration(int k, int n_max) {
  const auto order = static_cast<std::size_t>(n_max);
  BiSeries counts(order, order);
  for (int n = 0; n <= n_max; ++n) {
    for (int l = 0; l <= n; ++l) counts.at(l, n) = BigInt(std::to_string(count_lower_by_parts(n, l, k)));
  }
  return compare_bi_series(kname("bivariate_vs_enumeration", k), gbar_bivariate(k, order, order), counts);
}

std::vector<VerificationReport> run_suite(Suite s, const SuiteLimits& lim) {
  std::vector<VerificationReport> out;
  auto append = [&](Suite sub) {
    auto part = run_suite(sub, lim);
    out.insert(out.end(), part.begin(), part.end());
  };
  switch (s) {
    case Suite::bijection:
      out.push_back(check_lower_upper_counts(lim.bijection_n, lim.bijection_k));
      out.push_back(check_shift_bijection(lim.bijection_n, lim.bijection_k));
      out.push_back(check_conjugation(lim.conjugation_n));
      out.push_back(check_conjugation_example());
      out.push_back(check_mono_injections(lim.bijection_n, lim.bijection_k));
      break;
    case Suite::qdiff:
      for (int k = 1; k <= lim.qdiff_k; ++k) {
        for (auto& r : check_q_difference(k, lim.qdiff_x_order, lim.qdiff_q_order)) out.push_back(std::move(r));
      }
      break;
    case Suite::lambda:
      for (int k = 1; k <= lim.lambda_k; ++k) out.push_back(check_lambda(k, lim.lambda_m, lim.qdiff_q_order));
      break;
    case Suite::fine:
      out.push_back(check_gbar1_fine(lim.identity_order));
      break;
    case Suite::phi:
      out.push_back(check_gbar1_phi(lim.identity_order));
      break;
    case Suite::chi:
      out.push_back(check_g2_chi(lim.identity_order));
      break;
    case Suite::gk:
      for (int k = 1; k <= 3; ++k) out.push_back(check_gbar_vs_enumeration(k, lim.oracle_n));
      for (int k = 2; k <= 3; ++k) out.push_back(check_gk_vs_enumeration(k, lim.oracle_n));
      for (int k = 1; k <= 2; ++k) out.push_back(check_bivariate_vs_enumeration(k, lim.bivariate_n));
      break;
    case Suite::all:
      for (Suite sub : {Suite::bijection, Suite::qdiff, Suite::lambda, Suite::fine, Suite::phi, Suite::chi, Suite::gk}) {
        append(sub);
      }
      break;
  }
  return out;
}

}  // namespace krun
