#include "krun/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

namespace krun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxTerms = 10'000'000;

// B_{2m} / (2m+1)! for the series Li_2(z) = u - u^2/4 + sum_m B_{2m} u^{2m+1}/(2m+1)!,
// u = -log(1 - z).
const std::array<double, 30>& bernoulli_weights() {
  static const std::array<double, 30> w = [] {
    std::array<double, 30> out{};
    for (int m = 1; m <= 30; ++m) {
      out[m - 1] = boost::math::bernoulli_b2n<double>(m) / boost::math::factorial<double>(2 * m + 1);
    }
    return out;
  }();
  return w;
}

cplx dilog_power_series(cplx z, double tol) {
  cplx sum = 0.0;
  cplx zn = z;
  for (int n = 1; n < kMaxTerms; ++n) {
    const cplx term = zn / (static_cast<double>(n) * n);
    sum += term;
    if (std::abs(term) <= tol * std::abs(sum)) break;
    zn *= z;
  }
  return sum;
}

// Valid for |z| <= 1, Re z <= 1/2, where |u| stays well inside the radius 2 pi.
cplx dilog_bernoulli(cplx z, double tol) {
  const cplx u = -std::log(1.0 - z);
  const cplx u2 = u * u;
  cplx sum = u - u2 / 4.0;
  cplx upow = u;
  for (double w : bernoulli_weights()) {
    upow *= u2;
    const cplx term = w * upow;
    sum += term;
    if (std::abs(term) <= tol * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

cplx dilog(cplx z, double tol) {
  if (z.imag() == 0.0 && z.real() >= 1.0) throw BranchCut();
  if (std::abs(z) <= 0.5) return dilog_power_series(z, tol);
  if (std::abs(z) > 1.0) {
    const cplx lz = std::log(-z);
    return -kPi * kPi / 6.0 - 0.5 * lz * lz - dilog(1.0 / z, tol);
  }
  if (z.real() > 0.5) {
    return kPi * kPi / 6.0 - std::log(z) * std::log(1.0 - z) - dilog(1.0 - z, tol);
  }
  return dilog_bernoulli(z, tol);
}

cplx quantum_dilog_eps(cplx x, double eps, double tol) {
  if (std::abs(x) >= 1.0) throw DivergentInput();
  if (!(eps > 0.0)) throw std::invalid_argument("quantum dilog needs 0 < q < 1");
  cplx sum = 0.0;
  cplx xm = x;
  for (int m = 1; m < kMaxTerms; ++m) {
    const double denom = m * -std::expm1(-eps * m);
    const cplx term = xm / denom;
    sum += term;
    if (std::abs(term) <= tol * std::abs(sum) || std::abs(xm) == 0.0) return sum;
    xm *= x;
  }
  throw ConvergenceBudgetExceeded("quantum dilog series did not converge");
}

cplx quantum_dilog(cplx x, double q, double tol) {
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("quantum dilog needs 0 < q < 1");
  return quantum_dilog_eps(x, -std::log(q), tol);
}

cplx theta(double q, cplx x, double tol) {
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("theta needs 0 < q < 1");
  const double lq = std::log(q);
  const double lx = std::log(std::abs(x));
  cplx sum = 1.0;
  for (long n = 1; n < kMaxTerms; ++n) {
    const double dn = static_cast<double>(n);
    // Magnitudes of the +n and -n terms decide termination once past the peak.
    const double lp = lq * dn * dn + lx * dn;
    const double lm = lq * dn * dn - lx * dn;
    const cplx term = std::exp(lq * dn * dn) * (std::pow(x, dn) + std::pow(x, -dn));
    sum += term;
    const double peak = std::max(lp, lm);
    if (2.0 * dn * std::abs(lq) > std::abs(lx) && std::exp(peak) <= tol * std::abs(sum)) return sum;
  }
  throw ConvergenceBudgetExceeded("theta series did not converge");
}

cplx theta_poisson_nome(double a, cplx u, double tol) {
  if (!(a > 0.0)) throw std::invalid_argument("theta_poisson needs a > 0");
  const double scale = kPi * kPi / a;
  const long centre = std::lround(-u.real());
  cplx sum = 0.0;
  for (long off = 0; off < kMaxTerms; ++off) {
    cplx part = 0.0;
    for (long n : {centre + off, centre - off}) {
      const cplx v = static_cast<double>(n) + u;
      part += std::exp(-scale * v * v);
      if (off == 0) break;
    }
    sum += part;
    // Terms decay like exp(-scale * off^2) past the centre.
    if (off > 0 && std::abs(part) <= tol * std::abs(sum)) return std::sqrt(kPi / a) * sum;
  }
  throw ConvergenceBudgetExceeded("Poisson-transformed theta did not converge");
}

cplx theta_poisson(int k, double eps, cplx u, double tol) {
  return theta_poisson_nome(k * (k + 1) * eps / 2.0, u, tol);
}

}  // namespace krun
