#include "krun/series.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

#include "krun/detail/parallel.hpp"

namespace krun {

namespace {

unsigned initial_thread_count() {
  if (const char* env = std::getenv("QRUN_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return 1;
}

std::atomic<unsigned>& thread_setting() {
  static std::atomic<unsigned> value{initial_thread_count()};
  return value;
}

std::vector<std::size_t> nonzero_indices(const IntSeries& a, std::size_t limit) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i <= limit; ++i) {
    if (sgn(a[i]) != 0) idx.push_back(i);
  }
  return idx;
}

}  // namespace

void set_thread_count(unsigned n) { thread_setting() = std::max(1u, n); }
unsigned thread_count() { return thread_setting(); }

IntSeries::IntSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

IntSeries::IntSeries(std::initializer_list<long> coeffs, std::size_t order) : coeffs_(order + 1) {
  std::size_t i = 0;
  for (long c : coeffs) {
    if (i > order) break;
    coeffs_[i++] = c;
  }
}

IntSeries IntSeries::one(std::size_t order) {
  IntSeries s(order);
  s[0] = 1;
  return s;
}

IntSeries IntSeries::monomial(const BigInt& c, std::size_t degree, std::size_t order) {
  IntSeries s(order);
  if (degree <= order) s[degree] = c;
  return s;
}

bool IntSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return sgn(c) == 0; });
}

std::size_t IntSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return i;
  }
  return coeffs_.size();
}

IntSeries IntSeries::truncated(std::size_t order) const {
  IntSeries s(order);
  const std::size_t n = std::min(order, this->order());
  std::copy_n(coeffs_.begin(), n + 1, s.coeffs_.begin());
  return s;
}

void IntSeries::truncate(std::size_t order) {
  if (order < this->order()) coeffs_.resize(order + 1);
}

IntSeries IntSeries::shifted(std::size_t d) const {
  IntSeries s(order());
  for (std::size_t i = d; i <= order(); ++i) s.coeffs_[i] = coeffs_[i - d];
  return s;
}

IntSeries& IntSeries::operator+=(const IntSeries& b) {
  if (b.order() < order()) coeffs_.resize(b.order() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

IntSeries& IntSeries::operator-=(const IntSeries& b) {
  if (b.order() < order()) coeffs_.resize(b.order() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

IntSeries& IntSeries::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntSeries add(const IntSeries& a, const IntSeries& b) {
  IntSeries c = a.truncated(std::min(a.order(), b.order()));
  c += b;
  return c;
}

IntSeries sub(const IntSeries& a, const IntSeries& b) {
  IntSeries c = a.truncated(std::min(a.order(), b.order()));
  c -= b;
  return c;
}

IntSeries negate(const IntSeries& a) { return scale(a, BigInt(-1)); }

IntSeries scale(const IntSeries& a, const BigInt& c) {
  IntSeries r = a;
  r *= c;
  return r;
}

IntSeries mul(const IntSeries& a, const IntSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  auto nz_a = nonzero_indices(a, order);
  auto nz_b = nonzero_indices(b, order);
  // Iterate over the sparser operand.
  const bool swap = nz_b.size() < nz_a.size();
  const IntSeries& outer = swap ? b : a;
  const IntSeries& inner = swap ? a : b;
  const auto& nz = swap ? nz_b : nz_a;

  IntSeries c(order);
  const unsigned workers = order >= kParallelMulThreshold ? thread_count() : 1;
  if (workers == 1) {
    for (std::size_t i : nz) {
      const mpz_srcptr ai = outer[i].get_mpz_t();
      for (std::size_t j = 0; i + j <= order; ++j) {
        mpz_addmul(c[i + j].get_mpz_t(), ai, inner[j].get_mpz_t());
      }
    }
    return c;
  }
  // Each worker owns a contiguous block of output coefficients.
  detail::parallel_chunks(order + 1, workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t n = begin; n < end; ++n) {
      mpz_ptr cn = c[n].get_mpz_t();
      for (std::size_t i : nz) {
        if (i > n) break;
        mpz_addmul(cn, outer[i].get_mpz_t(), inner[n - i].get_mpz_t());
      }
    }
  });
  return c;
}

IntSeries invert(const IntSeries& a) {
  if (abs(a[0]) != 1) throw NonUnitConstantTerm();
  const std::size_t order = a.order();
  const int u = sgn(a[0]);
  auto nz = nonzero_indices(a, order);
  IntSeries b(order);
  b[0] = u;
  BigInt acc;
  for (std::size_t n = 1; n <= order; ++n) {
    acc = 0;
    for (std::size_t i : nz) {
      if (i == 0) continue;
      if (i > n) break;
      mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[n - i].get_mpz_t());
    }
    // b_n = -(1/a_0) * sum_{i>=1} a_i b_{n-i}, and 1/a_0 = a_0 for a unit.
    b[n] = u > 0 ? BigInt(-acc) : acc;
  }
  return b;
}

IntSeries divide(const IntSeries& a, const IntSeries& b) {
  if (sgn(b[0]) == 0) throw NonIntegerQuotient("divisor has zero constant term");
  const std::size_t order = std::min(a.order(), b.order());
  auto nz = nonzero_indices(b, order);
  IntSeries c(order);
  BigInt acc;
  for (std::size_t n = 0; n <= order; ++n) {
    acc = a[n];
    for (std::size_t i : nz) {
      if (i == 0) continue;
      if (i > n) break;
      mpz_submul(acc.get_mpz_t(), b[i].get_mpz_t(), c[n - i].get_mpz_t());
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), b[0].get_mpz_t())) {
      throw NonIntegerQuotient("inexact division at q^" + std::to_string(n));
    }
    mpz_divexact(c[n].get_mpz_t(), acc.get_mpz_t(), b[0].get_mpz_t());
  }
  return c;
}

void mul_binomial_inplace(IntSeries& a, int sign, std::size_t m) {
  const std::size_t order = a.order();
  if (m == 0 || m > order) {
    if (m == 0) a *= BigInt(1 + sign);
    return;
  }
  for (std::size_t i = order; i >= m; --i) {
    if (sign > 0) {
      a[i] += a[i - m];
    } else {
      a[i] -= a[i - m];
    }
  }
}

void div_binomial_inplace(IntSeries& a, int sign, std::size_t m) {
  const std::size_t order = a.order();
  for (std::size_t i = m; i <= order; ++i) {
    if (sign > 0) {
      a[i] -= a[i - m];
    } else {
      a[i] += a[i - m];
    }
  }
}

void div_trinomial_inplace(IntSeries& a, std::size_t m) {
  const std::size_t order = a.order();
  for (std::size_t i = m; i <= order; ++i) {
    a[i] += a[i - m];
    if (i >= 2 * m) a[i] -= a[i - 2 * m];
  }
}

IntSeries pochhammer(std::size_t base_exp, std::size_t step, std::size_t n, std::size_t order,
                     PochhammerSign sign) {
  if (base_exp == 0 || step == 0) {
    throw std::invalid_argument("pochhammer needs base_exp >= 1 and step >= 1");
  }
  IntSeries result = IntSeries::one(order);
  const int s = sign == PochhammerSign::minus ? -1 : 1;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t e = base_exp + j * step;
    if (e > order) break;
    mul_binomial_inplace(result, s, e);
  }
  return result;
}

std::vector<std::pair<std::size_t, int>> pentagonal_terms(std::size_t limit) {
  std::vector<std::pair<std::size_t, int>> terms;
  for (std::size_t k = 1;; ++k) {
    const std::size_t g1 = k * (3 * k - 1) / 2;
    if (g1 > limit) break;
    const int sign = (k % 2 == 1) ? -1 : 1;
    terms.emplace_back(g1, sign);
    const std::size_t g2 = k * (3 * k + 1) / 2;
    if (g2 <= limit) terms.emplace_back(g2, sign);
  }
  return terms;
}

IntSeries euler_inverse(std::size_t order) {
  const auto terms = pentagonal_terms(order);
  IntSeries p(order);
  p[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    // p(n) = -sum over generalized pentagonal g of sign(g) p(n - g).
    for (const auto& [g, sign] : terms) {
      if (g > n) break;
      if (sign < 0) {
        p[n] += p[n - g];
      } else {
        p[n] -= p[n - g];
      }
    }
  }
  return p;
}

// ---------------------------------------------------------------- BiSeries

BiSeries::BiSeries(std::size_t x_order, std::size_t q_order)
    : columns_(x_order + 1, IntSeries(q_order)), q_order_(q_order) {}

BiSeries BiSeries::from_q(const IntSeries& a, std::size_t x_order) {
  BiSeries r(x_order, a.order());
  r[0] = a;
  return r;
}

BiSeries& BiSeries::operator+=(const BiSeries& b) {
  *this = bi_add(*this, b);
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& b) {
  *this = bi_sub(*this, b);
  return *this;
}

BiSeries bi_monomial(const BigInt& c, std::size_t x_deg, std::size_t q_deg, std::size_t x_order,
                     std::size_t q_order) {
  BiSeries r(x_order, q_order);
  if (x_deg <= x_order && q_deg <= q_order) r.at(x_deg, q_deg) = c;
  return r;
}

BiSeries bi_add(const BiSeries& a, const BiSeries& b) {
  const std::size_t xm = std::min(a.x_order(), b.x_order());
  const std::size_t qn = std::min(a.q_order(), b.q_order());
  BiSeries r(xm, qn);
  for (std::size_t m = 0; m <= xm; ++m) r[m] = add(a[m], b[m]);
  return r;
}

BiSeries bi_sub(const BiSeries& a, const BiSeries& b) {
  const std::size_t xm = std::min(a.x_order(), b.x_order());
  const std::size_t qn = std::min(a.q_order(), b.q_order());
  BiSeries r(xm, qn);
  for (std::size_t m = 0; m <= xm; ++m) r[m] = sub(a[m], b[m]);
  return r;
}

BiSeries bi_mul(const BiSeries& a, const BiSeries& b) {
  const std::size_t xm = std::min(a.x_order(), b.x_order());
  const std::size_t qn = std::min(a.q_order(), b.q_order());
  BiSeries r(xm, qn);
  for (std::size_t i = 0; i <= xm; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= xm; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += mul(a[i].truncated(qn), b[j].truncated(qn));
    }
  }
  return r;
}

BiSeries bi_scale(const BiSeries& a, const IntSeries& c) {
  const std::size_t qn = std::min(a.q_order(), c.order());
  BiSeries r(a.x_order(), qn);
  for (std::size_t m = 0; m <= a.x_order(); ++m) r[m] = mul(a[m], c);
  return r;
}

IntSeries bi_substitute_x1(const BiSeries& a) {
  IntSeries s(a.q_order());
  for (std::size_t m = 0; m <= a.x_order(); ++m) s += a[m];
  return s;
}

IntSeries bi_coefficient(const BiSeries& a, std::size_t m) {
  if (m > a.x_order()) return IntSeries(a.q_order());
  return a[m];
}

BiSeries bi_substitute_xq(const BiSeries& a, std::size_t j) {
  BiSeries r(a.x_order(), a.q_order());
  for (std::size_t m = 0; m <= a.x_order(); ++m) r[m] = a[m].shifted(m * j);
  return r;
}

BiSeries bi_geometric(std::size_t x_deg, std::size_t q_deg, std::size_t x_order, std::size_t q_order) {
  BiSeries r(x_order, q_order);
  for (std::size_t t = 0; t * x_deg <= x_order && t * q_deg <= q_order; ++t) {
    r.at(t * x_deg, t * q_deg) = 1;
    if (x_deg == 0) break;
  }
  return r;
}

BiSeries bi_xq_pochhammer(std::size_t x_order, std::size_t q_order) {
  BiSeries r(x_order, q_order);
  // Column m holds (-1)^m q^{m(m+1)/2} / (q;q)_m, built incrementally.
  IntSeries col = IntSeries::one(q_order);
  for (std::size_t m = 0; m <= x_order; ++m) {
    if (m > 0) div_binomial_inplace(col, -1, m);
    const std::size_t e = m * (m + 1) / 2;
    if (e > q_order) break;
    r[m] = col.shifted(e);
    if (m % 2 == 1) r[m] *= BigInt(-1);
  }
  return r;
}

BiSeries bi_xq_pochhammer_inverse(std::size_t x_order, std::size_t q_order) {
  BiSeries r(x_order, q_order);
  IntSeries col = IntSeries::one(q_order);
  for (std::size_t m = 0; m <= x_order; ++m) {
    if (m > 0) div_binomial_inplace(col, -1, m);
    if (m > q_order) break;
    r[m] = col.shifted(m);
  }
  return r;
}

}  // namespace krun
