// Numerical side of the constant-term method: H_k(e^{-eps}) from its double
// sum and from the contour-integral representation, the stationary-phase
// constants, and the closed-form asymptotic formulas (carried as logs).
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "krun/series.hpp"
#include "krun/special.hpp"

namespace krun {

class QuadratureNotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Height of the integration line, ln 2 / (2 pi): the critical point w = i c.
double default_contour_height();

struct SaddleData {
  int k = 1;
  cplx w;             ///< critical point i ln2 / (2 pi)
  double f_w = 0;     ///< f(w) = pi^2 / (12 k (k+1))
  double f2_w = 0;    ///< f''(w) = -8 pi^2 / (k (k+1))
  double contour_height = 0;
};

/// Leading eps^{-1} coefficient of the integrand's exponent,
/// f(u) = (-2 pi^2 u^2 + Li_2(e^{2 pi i u})) / (k (k+1)).
cplx saddle_f(int k, cplx u);
/// f'(u) = 2 pi i / (k(k+1)) * (2 pi i u - log(1 - e^{2 pi i u})).
cplx saddle_f1(int k, cplx u);
cplx saddle_f2(int k, cplx u);
/// Constants evaluated from saddle_f at w = i c (c = default height unless given).
SaddleData saddle_data(int k);
SaddleData saddle_data(int k, double contour_height);

/// Full exponent of the contour integrand (Gaussian written with 2 pi^2),
///   -2 pi^2 u^2/(eps k(k+1)) + Li_2(e^{2 pi i u}; e^{-k eps})
///                          - Li_2(e^{2 pi i u - (k+1) eps}; e^{-(k+1) eps}).
cplx contour_exponent(int k, double eps, cplx u);
/// Second-order stationary-phase model of contour_exponent at u = w + sqrt(eps) z:
///   f(w)/eps + f''(w) z^2 / 2 - log(1 - e^{2 pi i w}).
cplx contour_exponent_model(int k, double eps, cplx z);

/// H_k(e^{-eps}) by direct summation of its double sum in 50-digit floating
/// point. Accurate for eps >= 0.02; throws ConvergenceBudgetExceeded when the
/// alternating terms would cancel beyond the working precision.
double hk_numeric(int k, double eps, double tol = 1e-13);

/// sum_n c_n e^{-eps n} for an exact series, in double precision.
double evaluate_series(const IntSeries& s, double eps);

enum class ContourPrefactor { sqrt_2pi, sqrt_2pi_squared };  // sqrt(2pi/..) or sqrt(2pi^2/..)
enum class GaussianExponent { two_pi_squared, two_pi };      // -2pi^2 u^2/.. or -2pi u^2/..

struct ContourNormalization {
  ContourPrefactor prefactor = ContourPrefactor::sqrt_2pi;
  GaussianExponent gaussian = GaussianExponent::two_pi_squared;
};
std::string to_string(const ContourNormalization& n);

struct QuadParams {
  double half_width = 0;  ///< U; 0 selects it from the Gaussian decay
  double step = 0;        ///< initial trapezoid spacing; 0 selects it from c
  double height = 0;      ///< contour height c; 0 means ln2/(2 pi)
  double tol = 1e-12;     ///< relative change between successive halvings
  int max_halvings = 8;
  ContourNormalization norm;
};

struct ContourResult {
  double value = 0;
  double imag = 0;     ///< imaginary part of the quadrature, ~0 for a real H_k
  double step = 0;     ///< spacing of the accepted rule
  double half_width = 0;
  double last_change = 0;
  int nodes = 0;
};

/// Trapezoid rule on R + ic for the contour representation of H_k(e^{-eps}),
/// halving the spacing until successive results agree to params.tol.
ContourResult hk_contour_detail(int k, double eps, const QuadParams& params = {});
double hk_contour(int k, double eps, const QuadParams& params = {});

struct CalibrationCandidate {
  ContourNormalization norm;
  double value = 0;
  double relative_error = 0;
};
struct ContourCalibration {
  int k = 1;
  double eps = 0.3;
  double reference = 0;  ///< hk_numeric at the calibration point
  ContourNormalization chosen;
  std::vector<CalibrationCandidate> candidates;
};
/// Evaluates every prefactor/exponent pairing at one (k, eps) and keeps the
/// one closest to hk_numeric.
ContourCalibration calibrate_contour(int k = 1, double eps = 0.3);

/// Closed-form asymptotic value stored as its natural logarithm.
struct AsymptoticEstimate {
  double point = 0;  ///< n or eps
  double log_value = 0;
  std::string formula_id;
  double value() const;
};

/// sqrt(2) exp(pi^2 / (12 k (k+1) eps)).
AsymptoticEstimate hk_asymptote(int k, double eps);
/// (1/(2 sqrt6 n)) sqrt(1 + 1/(2k(k+1))) exp(pi sqrt(2/3 (1 + 1/(2k(k+1))) n)).
AsymptoticEstimate pbar_asymptote(int k, double n);
/// pi sqrt(2/3 (1 - 2/(k(k+1))) n), the leading term of log p_k(n).
double pk_log_asymptote(int k, double n);
/// exp((2 pi/3) sqrt n) / (4 sqrt3 n^{3/4}).
AsymptoticEstimate p2_asymptote(double n);
/// sqrt(2 pi / eps) exp(-pi^2 / (6 eps)), leading behaviour of (q;q)_inf.
AsymptoticEstimate eta_asymptote(double eps);
/// Partial-sum asymptote lambda/(2 sqrt pi) A^{alpha/2-1/4} n^{-alpha/2-1/4} exp(2 sqrt(A n))
/// for a series behaving like lambda eps^alpha exp(A/eps).
AsymptoticEstimate ingham_asymptote(double lambda, double alpha, double A, double n);
/// Constant in the exponent of (1-q) Gbar_k: pi^2/6 (1 + 1/(2k(k+1))).
double gbar_exponent_constant(int k);
/// (1 - q) Gbar_k(q) ~ eps^{3/2}/sqrt(pi) exp(A/eps), as composed from the
/// eta and H_k asymptotes.
AsymptoticEstimate one_minus_q_gbar_asymptote(int k, double eps);
/// pbar_asymptote obtained by feeding one_minus_q_gbar_asymptote to Ingham.
AsymptoticEstimate pbar_via_ingham(int k, double n);

/// Natural log of a positive big integer from its top bits and bit length.
double log_bigint(const BigInt& v);

}  // namespace krun
