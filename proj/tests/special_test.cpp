#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "krun/special.hpp"

using namespace krun;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("dilog against reference values") {
  // 30-digit values of the principal branch.
  const std::vector<std::pair<cplx, cplx>> ref{
      {{0.3, 0.4}, {0.26659686674274041589, 0.46136289181910899428}},
      {{-2, 1}, {-1.4890920430306578229, 0.54093100319857905892}},
      {{0.9, -0.2}, {1.1898655826035623809, -0.4471849047239117407}},
      {{0.6, 0.7}, {0.46036818286372290957, 0.90993794579668867061}},
      {{-0.5, 0}, {-0.44841420692364620244, 0}},
      {{3, 0.1}, {2.2159467368784708094, 3.4300079350374747681}},
      {{0, 0.25}, {-0.015387411781410535629, 0.24830175098230686908}},
  };
  for (const auto& [z, v] : ref) CHECK(rel(dilog(z), v) < 1e-13);

  CHECK(dilog(0.0) == cplx(0.0));
  CHECK(std::abs(dilog(1.0 - 1e-15) - kPi * kPi / 6) < 1e-12);
  CHECK(std::abs(dilog(-1.0) + kPi * kPi / 12) < 1e-14);
  const double ln2 = std::log(2.0);
  CHECK(std::abs(dilog(0.5) - (kPi * kPi / 12 - ln2 * ln2 / 2)) < 1e-12);
  CHECK_THROWS_AS(dilog(2.0), BranchCut);
  CHECK_THROWS_AS(dilog(1.0), BranchCut);
}

TEST_CASE("dilog reflection on random points") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    cplx z(coord(rng), coord(rng));
    if (std::abs(z.imag()) < 1e-3) z += cplx(0, 0.1);
    const cplx lhs = dilog(z) + dilog(1.0 - z);
    const cplx rhs = kPi * kPi / 6 - std::log(z) * std::log(1.0 - z);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("quantum dilog") {
  CHECK(quantum_dilog(0.0, 0.5) == cplx(0.0));
  // exp(-Li_2(x; q)) is the product (x; q)_inf.
  for (auto [x, q] : {std::pair{0.3, 0.5}, {-0.7, 0.9}, {0.95, 0.2}}) {
    double prod = 1;
    for (int j = 0; j < 2000; ++j) prod *= 1 - x * std::pow(q, j);
    CHECK(std::abs(std::exp(-quantum_dilog(x, q)) - prod) / prod < 1e-12);
  }
  const cplx xc(0.2, 0.5);
  cplx prod = 1;
  for (int j = 0; j < 200; ++j) prod *= 1.0 - xc * std::pow(0.7, j);
  CHECK(std::abs(std::exp(-quantum_dilog(xc, 0.7)) - prod) / std::abs(prod) < 1e-12);
  CHECK_THROWS_AS(quantum_dilog(1.0, 0.5), DivergentInput);
  CHECK_THROWS_AS(quantum_dilog(0.5, 1.0), std::invalid_argument);
}

TEST_CASE("small-eps expansion of the quantum dilog is second order") {
  // eps Li_2(e^{-B eps} x; e^{-eps}) = Li_2(x) + eps (B - 1/2) log(1 - x) + O(eps^2).
  const double x = 0.4;
  for (double B : {0.0, 2.0, 3.0}) {
    std::vector<double> err;
    for (double eps = 1e-2; eps > 1e-3; eps /= 2) {
      const cplx lhs = eps * quantum_dilog_eps(std::exp(-B * eps) * x, eps, 1e-17);
      err.push_back(std::abs(lhs - (dilog(x) + eps * (B - 0.5) * std::log(1 - x))));
    }
    REQUIRE(err.size() == 4);
    for (std::size_t i = 1; i < err.size(); ++i) {
      const double ratio = err[i - 1] / err[i];
      CHECK(ratio >= 3.4);
      CHECK(ratio <= 4.6);
    }
  }
}

TEST_CASE("theta and its Poisson form") {
  const double c = std::log(2.0) / (2 * kPi);
  for (int k : {1, 2, 3}) {
    for (double eps : {0.5, 0.3, 1.0}) {
      for (cplx u : {cplx(0.1, c), cplx(-0.37, 0.05), cplx(0.0, 0.0), cplx(0.25, -0.1)}) {
        const double q = std::exp(-k * (k + 1) * eps / 2);
        const cplx direct = theta(q, std::exp(2.0 * kPi * cplx(0, 1) * u));
        CHECK(std::abs(direct - theta_poisson(k, eps, u)) / std::abs(direct) < 1e-10);
      }
    }
  }
  // x = 1 reduces to 1 + 2 sum q^{n^2}.
  double s = 1;
  for (int n = 1; n < 50; ++n) s += 2 * std::pow(0.6, n * n);
  CHECK(std::abs(theta(0.6, 1.0) - s) < 1e-14);
  // Laurent symmetry n <-> -n.
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> angle(0, 2 * kPi);
  for (int i = 0; i < 20; ++i) {
    const cplx x = std::polar(1.0, angle(rng));
    CHECK(std::abs(theta(0.8, x) - theta(0.8, 1.0 / x)) < 1e-12);
  }
  CHECK_THROWS_AS(theta(1.0, 1.0), std::invalid_argument);
}
