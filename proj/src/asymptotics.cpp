#include "krun/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <span>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace krun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
const cplx kI{0.0, 1.0};

using mpfloat = boost::multiprecision::cpp_bin_float_50;

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
}

void check_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("eps must be positive");
}

/// Pairwise sum, independent of how the caller later splits the range.
cplx pairwise_sum(std::span<const cplx> v) {
  if (v.size() <= 8) {
    cplx s = 0.0;
    for (const auto& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

double kk1(int k) { return static_cast<double>(k) * (k + 1); }

}  // namespace

double default_contour_height() { return kLn2 / (2.0 * kPi); }

cplx saddle_f(int k, cplx u) {
  check_k(k);
  return (-2.0 * kPi * kPi * u * u + dilog(std::exp(2.0 * kPi * kI * u))) / kk1(k);
}

cplx saddle_f1(int k, cplx u) {
  check_k(k);
  return 2.0 * kPi * kI / kk1(k) * (2.0 * kPi * kI * u - std::log(1.0 - std::exp(2.0 * kPi * kI * u)));
}

cplx saddle_f2(int k, cplx u) {
  check_k(k);
  const cplx x = std::exp(2.0 * kPi * kI * u);
  return 2.0 * kPi * kI / kk1(k) * (2.0 * kPi * kI + 2.0 * kPi * kI * x / (1.0 - x));
}

SaddleData saddle_data(int k) { return saddle_data(k, default_contour_height()); }

SaddleData saddle_data(int k, double contour_height) {
  SaddleData d;
  d.k = k;
  d.contour_height = contour_height;
  d.w = cplx(0.0, contour_height);
  d.f_w = saddle_f(k, d.w).real();
  d.f2_w = saddle_f2(k, d.w).real();
  return d;
}

cplx contour_exponent(int k, double eps, cplx u) {
  check_k(k);
  check_eps(eps);
  const cplx x = std::exp(2.0 * kPi * kI * u);
  return -2.0 * kPi * kPi * u * u / (eps * kk1(k)) + quantum_dilog_eps(x, k * eps) -
         quantum_dilog_eps(x * std::exp(-(k + 1) * eps), (k + 1) * eps);
}

cplx contour_exponent_model(int k, double eps, cplx z) {
  const SaddleData d = saddle_data(k);
  return d.f_w / eps + d.f2_w * z * z / 2.0 - std::log(1.0 - std::exp(2.0 * kPi * kI * d.w));
}

double hk_numeric(int k, double eps, double tol) {
  check_k(k);
  check_eps(eps);
  const mpfloat q = exp(-mpfloat(eps));
  const std::size_t kk = static_cast<std::size_t>(k);
  const std::size_t tri = kk * (kk + 1) / 2;
  // (q^k;q^k)_r and (q^{k+1};q^{k+1})_s, grown on demand.
  std::vector<mpfloat> poch_k{mpfloat(1)};
  std::vector<mpfloat> poch_k1{mpfloat(1)};
  mpfloat sum = 0;
  mpfloat largest = 0;
  mpfloat previous_diag = std::numeric_limits<double>::infinity();
  constexpr std::size_t kMaxDiagonals = 100'000;
  for (std::size_t t = 0; t < kMaxDiagonals; ++t) {
    while (poch_k.size() <= t) poch_k.push_back(poch_k.back() * (1 - pow(q, kk * poch_k.size())));
    while (poch_k1.size() <= t) poch_k1.push_back(poch_k1.back() * (1 - pow(q, (kk + 1) * poch_k1.size())));
    mpfloat diag = 0;
    mpfloat diag_abs = 0;
    for (std::size_t r = 0; r <= t; ++r) {
      const std::size_t s = t - r;
      const std::size_t e = tri * t * t + (kk + 1) * s * (s + 1) / 2;
      const mpfloat term = exp(-mpfloat(eps) * e) / (poch_k[r] * poch_k1[s]);
      diag += (s % 2 == 1) ? mpfloat(-term) : term;
      diag_abs += term;
      if (term > largest) largest = term;
    }
    sum += diag;
    if (t > 0 && diag_abs < previous_diag && diag_abs <= tol * abs(sum)) {
      // 50 digits of working precision; leave room for the requested tol.
      if (largest / abs(sum) > mpfloat(1e30)) {
        throw ConvergenceBudgetExceeded("double sum cancels beyond working precision at eps = " +
                                        std::to_string(eps));
      }
      return static_cast<double>(sum);
    }
    previous_diag = diag_abs;
  }
  throw ConvergenceBudgetExceeded("double sum did not converge");
}

double evaluate_series(const IntSeries& s, double eps) {
  long double sum = 0;
  for (std::size_t n = 0; n <= s.order(); ++n) {
    const int sg = sgn(s[n]);
    if (sg == 0) continue;
    const double lg = log_bigint(abs(s[n])) - eps * static_cast<double>(n);
    sum += sg * std::exp(static_cast<long double>(lg));
  }
  return static_cast<double>(sum);
}

std::string to_string(const ContourNormalization& n) {
  std::string out = n.prefactor == ContourPrefactor::sqrt_2pi ? "sqrt(2pi/(eps k(k+1)))" : "sqrt(2pi^2/(eps k(k+1)))";
  out += n.gaussian == GaussianExponent::two_pi_squared ? " with -2pi^2 u^2" : " with -2pi u^2";
  return out;
}

ContourResult hk_contour_detail(int k, double eps, const QuadParams& params) {
  check_k(k);
  check_eps(eps);
  const double c = params.height > 0 ? params.height : default_contour_height();
  const double g = params.norm.gaussian == GaussianExponent::two_pi_squared ? 2.0 * kPi * kPi : 2.0 * kPi;
  const double a = g / (eps * kk1(k));
  const double pre_num = params.norm.prefactor == ContourPrefactor::sqrt_2pi ? 2.0 * kPi : 2.0 * kPi * kPi;
  const double prefactor = std::sqrt(pre_num / (eps * kk1(k)));

  auto periodic = [&](cplx u) {
    const cplx x = std::exp(2.0 * kPi * kI * u);
    // Principal log(1 - x) stays off its cut along the whole line.
    if (!((1.0 - x).real() > 0.0)) throw std::logic_error("contour crosses the log(1 - x) branch cut");
    return quantum_dilog_eps(x, k * eps) - quantum_dilog_eps(x * std::exp(-(k + 1) * eps), (k + 1) * eps);
  };
  auto integrand = [&](double t) {
    const cplx u(t, c);
    return std::exp(-a * u * u + periodic(u));
  };

  double U = params.half_width;
  if (U <= 0) {
    const double peak = std::max(0.0, periodic(cplx(0.0, c)).real());
    U = std::sqrt((40.0 + peak) / a + c * c);
  }
  double h = params.step > 0 ? params.step : 2.0 * kPi * c / 40.0;
  // Snap the spacing so that U is a whole number of steps.
  const long base_n = std::max(2L, static_cast<long>(std::ceil(U / h)));
  h = U / static_cast<double>(base_n);

  std::vector<cplx> values;
  for (long j = -base_n; j <= base_n; ++j) values.push_back(integrand(j * h));
  cplx sum = pairwise_sum(values);
  cplx current = h * sum;
  long intervals = 2 * base_n;

  ContourResult res;
  for (int halving = 1; halving <= params.max_halvings; ++halving) {
    std::vector<cplx> mids;
    const double hn = h / 2.0;
    for (long j = 0; j < intervals; ++j) mids.push_back(integrand(-U + (2 * j + 1) * hn));
    sum += pairwise_sum(mids);
    const cplx refined = hn * sum;
    const double change = std::abs(refined - current) / std::abs(refined);
    h = hn;
    intervals *= 2;
    current = refined;
    res.last_change = change;
    if (change <= params.tol) {
      res.value = prefactor * current.real();
      res.imag = prefactor * current.imag();
      res.step = h;
      res.half_width = U;
      res.nodes = static_cast<int>(intervals + 1);
      return res;
    }
  }
  throw QuadratureNotConverged("trapezoid rule did not settle after " + std::to_string(params.max_halvings) +
                               " halvings (last relative change " + std::to_string(res.last_change) + ")");
}

double hk_contour(int k, double eps, const QuadParams& params) { return hk_contour_detail(k, eps, params).value; }

ContourCalibration calibrate_contour(int k, double eps) {
  ContourCalibration cal;
  cal.k = k;
  cal.eps = eps;
  cal.reference = hk_numeric(k, eps);
  double best = std::numeric_limits<double>::infinity();
  for (auto pre : {ContourPrefactor::sqrt_2pi, ContourPrefactor::sqrt_2pi_squared}) {
    for (auto gauss : {GaussianExponent::two_pi_squared, GaussianExponent::two_pi}) {
      QuadParams p;
      p.norm = {pre, gauss};
      CalibrationCandidate cand;
      cand.norm = p.norm;
      cand.value = hk_contour(k, eps, p);
      cand.relative_error = std::abs(cand.value - cal.reference) / std::abs(cal.reference);
      if (cand.relative_error < best) {
        best = cand.relative_error;
        cal.chosen = cand.norm;
      }
      cal.candidates.push_back(cand);
    }
  }
  return cal;
}

double AsymptoticEstimate::value() const { return std::exp(log_value); }

AsymptoticEstimate hk_asymptote(int k, double eps) {
  check_k(k);
  check_eps(eps);
  return {eps, 0.5 * std::log(2.0) + kPi * kPi / (12.0 * kk1(k) * eps), "hk"};
}

AsymptoticEstimate pbar_asymptote(int k, double n) {
  check_k(k);
  if (!(n >= 1)) throw std::invalid_argument("n must be >= 1");
  const double c = 1.0 + 1.0 / (2.0 * kk1(k));
  const double lg = -std::log(2.0 * std::sqrt(6.0) * n) + 0.5 * std::log(c) + kPi * std::sqrt(2.0 / 3.0 * c * n);
  return {n, lg, "pbar"};
}

double pk_log_asymptote(int k, double n) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (!(n >= 1)) throw std::invalid_argument("n must be >= 1");
  return kPi * std::sqrt(2.0 / 3.0 * (1.0 - 2.0 / kk1(k)) * n);
}

AsymptoticEstimate p2_asymptote(double n) {
  if (!(n >= 1)) throw std::invalid_argument("n must be >= 1");
  const double lg = -std::log(4.0 * std::sqrt(3.0)) - 0.75 * std::log(n) + 2.0 * kPi / 3.0 * std::sqrt(n);
  return {n, lg, "p2"};
}

AsymptoticEstimate eta_asymptote(double eps) {
  check_eps(eps);
  return {eps, 0.5 * std::log(2.0 * kPi / eps) - kPi * kPi / (6.0 * eps), "eta"};
}

AsymptoticEstimate ingham_asymptote(double lambda, double alpha, double A, double n) {
  if (!(A > 0)) throw std::invalid_argument("A must be positive");
  if (!(lambda > 0)) throw std::invalid_argument("lambda must be positive");
  if (!(n >= 1)) throw std::invalid_argument("n must be >= 1");
  const double lg = std::log(lambda / (2.0 * std::sqrt(kPi))) + (alpha / 2.0 - 0.25) * std::log(A) -
                    (alpha / 2.0 + 0.25) * std::log(n) + 2.0 * std::sqrt(A * n);
  return {n, lg, "ingham"};
}

double gbar_exponent_constant(int k) {
  check_k(k);
  return kPi * kPi / 6.0 * (1.0 + 1.0 / (2.0 * kk1(k)));
}

AsymptoticEstimate one_minus_q_gbar_asymptote(int k, double eps) {
  // (1 - q) ~ eps, Gbar_k = H_k / (q;q)_inf.
  const double lg = std::log(eps) + hk_asymptote(k, eps).log_value - eta_asymptote(eps).log_value;
  return {eps, lg, "one_minus_q_gbar"};
}

AsymptoticEstimate pbar_via_ingham(int k, double n) {
  AsymptoticEstimate est = ingham_asymptote(1.0 / std::sqrt(kPi), 1.5, gbar_exponent_constant(k), n);
  est.formula_id = "pbar_via_ingham";
  return est;
}

double log_bigint(const BigInt& v) {
  if (sgn(v) <= 0) throw std::domain_error("log_bigint needs a positive integer");
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * kLn2;
}

}  // namespace krun
