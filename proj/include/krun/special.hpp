// Dilogarithm, quantum dilogarithm and the Jacobi theta function.
#pragma once

#include <complex>
#include <stdexcept>

namespace krun {

using cplx = std::complex<double>;

class BranchCut : public std::domain_error {
 public:
  BranchCut() : std::domain_error("dilog argument on the branch cut [1, inf)") {}
};

class DivergentInput : public std::domain_error {
 public:
  DivergentInput() : std::domain_error("quantum dilogarithm needs |x| < 1") {}
};

class ConvergenceBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultTol = 1e-15;

/// Li_2(z) = sum z^n / n^2, principal branch. Power series for |z| <= 1/2;
/// otherwise inversion (|z| > 1), reflection (Re z > 1/2) and the Bernoulli
/// series in -log(1 - z). The real ray z >= 1 throws BranchCut.
cplx dilog(cplx z, double tol = kDefaultTol);

/// Li_2(x; q) = -log (x; q)_inf = sum_{m>=1} x^m / (m (1 - q^m)), |x| < 1.
cplx quantum_dilog(cplx x, double q, double tol = kDefaultTol);
/// Same with q = e^{-eps}, keeping 1 - q^m accurate for small eps.
cplx quantum_dilog_eps(cplx x, double eps, double tol = kDefaultTol);

/// theta(q; x) = sum_{n in Z} q^{n^2} x^n, 0 < q < 1, x != 0.
cplx theta(double q, cplx x, double tol = kDefaultTol);

/// theta(e^{-a}; e^{2 pi i u}) through Poisson summation:
/// sqrt(pi/a) sum_n exp(-pi^2 (n + u)^2 / a).
cplx theta_poisson_nome(double a, cplx u, double tol = kDefaultTol);
/// theta(e^{-k(k+1) eps / 2}; e^{2 pi i u}) via theta_poisson_nome.
cplx theta_poisson(int k, double eps, cplx u, double tol = kDefaultTol);

}  // namespace krun
