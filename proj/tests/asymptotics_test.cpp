#include <doctest.h>

#include <cmath>
#include <numbers>

#include "krun/asymptotics.hpp"
#include "krun/qgen.hpp"

using namespace krun;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("stationary-phase constants") {
  for (int k = 1; k <= 4; ++k) {
    const SaddleData d = saddle_data(k);
    const double kk1 = k * (k + 1.0);
    CHECK(d.w == cplx(0, std::log(2.0) / (2 * kPi)));
    CHECK(d.contour_height == doctest::Approx(default_contour_height()));
    CHECK(d.f_w == doctest::Approx(kPi * kPi / (12 * kk1)).epsilon(1e-13));
    CHECK(d.f2_w == doctest::Approx(-8 * kPi * kPi / kk1).epsilon(1e-13));
    CHECK(std::abs(saddle_f1(k, d.w)) < 1e-12);
    // f'' by central differences of f.
    const double h = 1e-4;
    const cplx fd = (saddle_f(k, d.w + h) - 2.0 * saddle_f(k, d.w) + saddle_f(k, d.w - h)) / (h * h);
    CHECK(std::abs(fd - saddle_f2(k, d.w)) / std::abs(fd) < 1e-5);
  }
}

TEST_CASE("exponent matches its quadratic model to O(sqrt eps)") {
  for (int k : {1, 2}) {
    std::vector<double> resid;
    for (double eps = 1e-2; eps > 1e-4; eps /= 4) {
      double worst = 0;
      for (double a = -1; a <= 1.0001; a += 0.25)
        for (double b = -1; b <= 1.0001; b += 0.25) {
          const cplx z(a, b);
          if (std::abs(z) > 1) continue;
          const cplx u = saddle_data(k).w + std::sqrt(eps) * z;
          worst = std::max(worst, std::abs(contour_exponent(k, eps, u) - contour_exponent_model(k, eps, z)));
        }
      resid.push_back(worst);
      CHECK(worst / std::sqrt(eps) < 150);
    }
    REQUIRE(resid.size() == 4);
    const double last = resid[2] / resid[3];
    CHECK(last > 1.8);
    CHECK(last < 2.6);
  }
}

TEST_CASE("hk_numeric against the exact series") {
  for (int k = 1; k <= 3; ++k) {
    const IntSeries h = hk_series(k, 800);
    for (double eps : {0.2, 0.3, 0.5, 1.0}) {
      CHECK(hk_numeric(k, eps) == doctest::Approx(evaluate_series(h, eps)).epsilon(1e-12));
    }
  }
  CHECK(hk_numeric(1, 0.02) == doctest::Approx(evaluate_series(hk_series(1, 6000), 0.02)).epsilon(1e-10));
  CHECK_THROWS_AS(hk_numeric(1, 0.002), ConvergenceBudgetExceeded);
  CHECK_THROWS_AS(hk_numeric(0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(hk_numeric(1, -0.1), std::invalid_argument);
}

TEST_CASE("contour calibration and agreement") {
  const ContourCalibration cal = calibrate_contour();
  CHECK(cal.candidates.size() == 4);
  CHECK(cal.chosen.prefactor == ContourPrefactor::sqrt_2pi);
  CHECK(cal.chosen.gaussian == GaussianExponent::two_pi_squared);
  for (const auto& c : cal.candidates) {
    const bool chosen = c.norm.prefactor == cal.chosen.prefactor && c.norm.gaussian == cal.chosen.gaussian;
    if (chosen) CHECK(c.relative_error < 1e-10);
    else CHECK(c.relative_error > 0.1);
  }
  QuadParams p;
  p.norm = cal.chosen;
  for (int k : {1, 2, 3}) {
    for (double eps : {0.2, 0.3, 0.5, 0.1}) {
      const ContourResult r = hk_contour_detail(k, eps, p);
      const double exact = hk_numeric(k, eps);
      CHECK(std::abs(r.value - exact) / exact < 1e-9);
      CHECK(std::abs(r.imag) < 1e-9 * exact);
    }
  }
}

TEST_CASE("quadrature controls") {
  QuadParams p;
  p.max_halvings = 0;
  CHECK_THROWS_AS(hk_contour(1, 0.3, p), QuadratureNotConverged);
  // A different height changes nothing as long as it stays below the first
  // singularity of the integrand.
  QuadParams shifted;
  shifted.height = 0.05;
  CHECK(hk_contour(1, 0.3, shifted) == doctest::Approx(hk_numeric(1, 0.3)).epsilon(1e-9));
  // Thread-free and order-free: identical on repeat.
  CHECK(hk_contour(2, 0.2) == hk_contour(2, 0.2));
}

TEST_CASE("closed-form asymptotes") {
  CHECK(hk_asymptote(1, kPi * kPi / 24).value() == doctest::Approx(std::sqrt(2.0) * std::exp(1.0)));
  CHECK(eta_asymptote(0.5).value() == doctest::Approx(std::sqrt(4 * kPi) * std::exp(-kPi * kPi / 3)));
  CHECK(p2_asymptote(100).value() ==
        doctest::Approx(std::exp(2 * kPi / 3 * 10) / (4 * std::sqrt(3.0) * std::pow(100.0, 0.75))));
  CHECK(pk_log_asymptote(2, 100) == doctest::Approx(kPi * std::sqrt(2.0 / 3.0 * (2.0 / 3.0) * 100)));
  const double c = 1 + 1.0 / 4;
  CHECK(pbar_asymptote(1, 50).value() ==
        doctest::Approx(std::sqrt(c) / (2 * std::sqrt(6.0) * 50) * std::exp(kPi * std::sqrt(2.0 / 3.0 * c * 50))));
  CHECK_THROWS_AS(pk_log_asymptote(1, 10), std::invalid_argument);
}

TEST_CASE("Ingham step reproduces the coefficient asymptote") {
  for (int k = 1; k <= 4; ++k) {
    // (1 - q) Gbar_k ~ eps^{3/2}/sqrt(pi) exp(A/eps), from the eta and H_k asymptotes.
    for (double eps : {0.1, 0.01}) {
      const double A = gbar_exponent_constant(k);
      CHECK(one_minus_q_gbar_asymptote(k, eps).log_value ==
            doctest::Approx(1.5 * std::log(eps) - 0.5 * std::log(kPi) + A / eps).epsilon(1e-13));
    }
    for (double n : {10.0, 1000.0, 1e6}) {
      CHECK(pbar_via_ingham(k, n).log_value == doctest::Approx(pbar_asymptote(k, n).log_value).epsilon(1e-13));
      // The exponent 1/2 printed next to the Tauberian step would give a different power of n.
      const double half = ingham_asymptote(1 / std::sqrt(kPi), 0.5, gbar_exponent_constant(k), n).log_value;
      CHECK(std::abs(half - pbar_asymptote(k, n).log_value) > 0.1);
    }
  }
}

TEST_CASE("logs of big integers") {
  CHECK(log_bigint(BigInt(1)) == 0.0);
  CHECK(log_bigint(BigInt("24061467864032622473692149727991")) == doctest::Approx(72.258164506987120575).epsilon(1e-15));
  BigInt big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 2000);
  CHECK(log_bigint(big) == doctest::Approx(2000 * std::log(10.0)).epsilon(1e-15));
  CHECK_THROWS_AS(log_bigint(BigInt(0)), std::domain_error);
}

TEST_CASE("coefficients approach the asymptote") {
  const IntSeries g = gbar_series(1, 2000);
  const double r500 = std::exp(log_bigint(g[500]) - pbar_asymptote(1, 500).log_value);
  const double r2000 = std::exp(log_bigint(g[2000]) - pbar_asymptote(1, 2000).log_value);
  CHECK(std::abs(1 - r2000) < std::abs(1 - r500));
  CHECK(r2000 > 0.9);
  CHECK(r2000 < 1.1);
}
