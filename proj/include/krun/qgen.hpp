// Exact q-expansions of the k-run generating functions and the machine
// checks of the identities relating them.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "krun/series.hpp"

namespace krun {

/// Which index carries the alternating sign in the shared double sum
///   sum_{r,s>=0} (-1)^{r or s} q^{k(k+1)(r+s)^2/2 + (k+1)s(s+1)/2}
///                / ((q^k;q^k)_r (q^{k+1};q^{k+1})_s).
/// alternate_s gives H_k = (q;q)_inf * Gbar_k; alternate_r gives (q;q)_inf * G_k.
enum class SignSelector { alternate_r, alternate_s };

IntSeries double_sum(int k, std::size_t order, SignSelector sign);
/// Same sum with each (r,s) term carried at x^{kr+(k+1)s}, x-degree <= x_order.
BiSeries double_sum_bivariate(int k, std::size_t x_order, std::size_t q_order, SignSelector sign);

/// H_k(q) = sum over the double sum with (-1)^s.
IntSeries hk_series(int k, std::size_t order);
/// Generating function of lower k-run overpartitions, H_k / (q;q)_inf.
IntSeries gbar_series(int k, std::size_t order);
/// Generating function of partitions without k-sequences.
IntSeries gk_series(int k, std::size_t order);
/// Two-variable generating function: coefficient of x^l q^n counts k-run
/// overpartitions of n with l parts.
BiSeries gbar_bivariate(int k, std::size_t x_order, std::size_t q_order);
/// Normalized form (xq;q)_inf * Gbar_k(x;q).
BiSeries lbar_bivariate(int k, std::size_t x_order, std::size_t q_order);

/// lambda_0..lambda_{m_max}, the x-coefficients of the normalized function,
/// from the first-order recurrence
///   (1 - q^m) lambda_m = q^{m(k+1) - k(k+1)/2} (lambda_{m-k} - lambda_{m-k-1})
/// seeded with lambda_0 = 1, lambda_1..lambda_{k-1} = 0,
/// lambda_k = q^{k(k+1)/2} / (1 - q^k).
std::vector<IntSeries> lambda_coeffs(int k, std::size_t m_max, std::size_t order);

/// Third-order mock theta phi(q) = sum q^{n^2} / (-q^2;q^2)_n.
IntSeries phi_series(std::size_t order);
/// Third-order mock theta chi(q) = sum q^{n^2} / prod_{j<=n} (1 - q^j + q^{2j}).
IntSeries chi_series(std::size_t order);
/// 1 + 2 sum_{n>=1} q^n/(1-q^n) prod_{j<n} (1+q^{2j})/(1-q^j).
IntSeries fine_bracket_series(std::size_t order);

struct CoefficientRow {
  std::size_t index = 0;
  BigInt lhs;
  BigInt rhs;
};

struct VerificationReport {
  std::string identity_name;
  std::size_t trunc_order = 0;
  bool passed = true;
  /// For bivariate checks this is the flattened index m * (q_order + 1) + n.
  std::optional<std::size_t> first_mismatch;
  std::optional<BigInt> lhs_coeff;
  std::optional<BigInt> rhs_coeff;
  /// Informational reports never gate a verification run.
  bool informational = false;
  std::string detail;
  std::vector<CoefficientRow> table;
};

/// Test hook: adds `delta` to the lhs coefficient at `index` (flattened for
/// bivariate checks) before comparing.
struct Perturbation {
  std::size_t index = 0;
  long delta = 1;
};

VerificationReport compare_series(std::string name, const IntSeries& lhs, const IntSeries& rhs,
                                  std::optional<Perturbation> fault = {});
VerificationReport compare_bi_series(std::string name, const BiSeries& lhs, const BiSeries& rhs,
                                     std::optional<Perturbation> fault = {});

/// Gbar_k(x) = Gbar_k(xq)/(1-xq) + x^k q^{k(k+1)/2} Gbar_k(xq^{k+1})/(xq;q)_k.
VerificationReport check_gbar_qdiff(int k, std::size_t x_order, std::size_t q_order,
                                    std::optional<Perturbation> fault = {});
/// L_k(x) - L_k(xq) = x^k q^{k(k+1)/2} (1 - xq^{k+1}) L_k(xq^{k+1}).
VerificationReport check_lbar_qdiff(int k, std::size_t x_order, std::size_t q_order,
                                    std::optional<Perturbation> fault = {});
/// Both functional equations.
std::vector<VerificationReport> check_q_difference(int k, std::size_t x_order, std::size_t q_order);

/// lambda_coeffs against the x-columns of lbar_bivariate, plus the seeded
/// initial values against the recurrence itself.
VerificationReport check_lambda(int k, std::size_t m_max, std::size_t order,
                                std::optional<Perturbation> fault = {});

/// Gbar_1 = Fine bracket series.
VerificationReport check_gbar1_fine(std::size_t order, std::optional<Perturbation> fault = {});
/// Gbar_1 against (q;q)_inf * phi. Informational; carries a table of the
/// first ten coefficients of both sides.
VerificationReport check_gbar1_phi(std::size_t order);
/// Same comparison with a caller-supplied stand-in for phi.
VerificationReport check_gbar1_phi_with(std::size_t order, const IntSeries& phi_candidate);
/// G_2 = (-q^3;q^3)_inf / (q^2;q^2)_inf * chi.
VerificationReport check_g2_chi(std::size_t order, std::optional<Perturbation> fault = {});

}  // namespace krun
