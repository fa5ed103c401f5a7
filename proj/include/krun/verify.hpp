// Verification suites assembled from the enumeration oracle and the exact
// series checks. Each suite returns one report per identity.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "krun/qgen.hpp"

namespace krun {

/// Tunables for the suites; defaults are the acceptance sizes.
struct SuiteLimits {
  int bijection_n = 14;
  int bijection_k = 3;
  int conjugation_n = 16;
  int oracle_n = 30;
  int bivariate_n = 25;
  int qdiff_k = 5;
  std::size_t qdiff_x_order = 30;
  std::size_t qdiff_q_order = 120;
  int lambda_k = 3;
  std::size_t lambda_m = 25;
  std::size_t identity_order = 500;
};

enum class Suite { bijection, qdiff, lambda, fine, phi, chi, gk, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

/// Suites that gate the exit status; `phi` is informational only.
bool suite_is_gating(Suite s);

std::vector<VerificationReport> run_suite(Suite s, const SuiteLimits& limits = {});

// Individual checks, also used directly by the acceptance tests.

/// count_lower(n,k) == count_upper(n,k) for n <= n_max, k <= k_max.
VerificationReport check_lower_upper_counts(int n_max, int k_max);
/// lower_to_upper preserves size, part count and overline count, lands in the
/// upper class, is injective, hits every upper overpartition, and is undone
/// by upper_to_lower.
VerificationReport check_shift_bijection(int n_max, int k_max);
/// conjugate is an involution on every overpartition of n <= n_max and maps
/// the lower 1-run class onto the conjugate class.
VerificationReport check_conjugation(int n_max);
/// The conjugation example 6'+4'+1+1+1' -> 5'+2+2+2'+1+1'.
VerificationReport check_conjugation_example();
/// Both monotonicity injections are injective and land in the right class.
VerificationReport check_mono_injections(int n_max, int k_max);

/// gbar_series(k) against count_lower for n <= n_max.
VerificationReport check_gbar_vs_enumeration(int k, int n_max);
/// gk_series(k) against count_no_k_sequence for n <= n_max.
VerificationReport check_gk_vs_enumeration(int k, int n_max);
/// gbar_bivariate(k) against count_lower_by_parts for n <= n_max.
VerificationReport check_bivariate_vs_enumeration(int k, int n_max);

}  // namespace krun
