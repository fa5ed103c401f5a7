// Truncated formal power series in q with arbitrary-precision integer
// coefficients, and bivariate series in (x, q) built on top of them.
//
// Every value carries an explicit truncation order N: the coefficients of
// q^0 .. q^N are exact, everything above is discarded eagerly. Binary
// operations truncate to the smaller of the two orders.
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace krun {

using BigInt = mpz_class;

class NonUnitConstantTerm : public std::domain_error {
 public:
  NonUnitConstantTerm() : std::domain_error("series constant term is not a unit (+1 or -1)") {}
};

class NonIntegerQuotient : public std::domain_error {
 public:
  explicit NonIntegerQuotient(const std::string& what) : std::domain_error(what) {}
};

/// Length sentinel meaning "infinite product, truncated at the series order".
inline constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();

class IntSeries {
 public:
  /// The zero series of order 0.
  IntSeries() : coeffs_(1) {}
  /// The zero series truncated at q^order.
  explicit IntSeries(std::size_t order) : coeffs_(order + 1) {}
  /// Takes coeffs as c_0..c_N; order is coeffs.size() - 1.
  explicit IntSeries(std::vector<BigInt> coeffs);
  IntSeries(std::initializer_list<long> coeffs, std::size_t order);

  static IntSeries one(std::size_t order);
  static IntSeries monomial(const BigInt& c, std::size_t degree, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }
  BigInt& operator[](std::size_t i) { return coeffs_[i]; }
  /// Coefficient of q^i, zero beyond the truncation order.
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  std::span<const BigInt> coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// Lowest degree with a nonzero coefficient, or order()+1 for zero.
  std::size_t valuation() const;

  IntSeries truncated(std::size_t order) const;
  /// Drops coefficients above q^order in place; no-op if order >= order().
  void truncate(std::size_t order);
  /// Multiplies by q^d.
  IntSeries shifted(std::size_t d) const;

  IntSeries& operator+=(const IntSeries& b);
  IntSeries& operator-=(const IntSeries& b);
  IntSeries& operator*=(const BigInt& c);

  /// Exact equality, including truncation order.
  friend bool operator==(const IntSeries& a, const IntSeries& b) = default;

 private:
  std::vector<BigInt> coeffs_;
};

IntSeries add(const IntSeries& a, const IntSeries& b);
IntSeries sub(const IntSeries& a, const IntSeries& b);
IntSeries negate(const IntSeries& a);
IntSeries scale(const IntSeries& a, const BigInt& c);
/// Truncated Cauchy product. Zero coefficients of the sparser operand are
/// skipped; for order >= kParallelMulThreshold the output range is split
/// across the configured worker threads.
IntSeries mul(const IntSeries& a, const IntSeries& b);
/// Multiplicative inverse; requires a[0] = +1 or -1.
IntSeries invert(const IntSeries& a);
/// Exact quotient a / b with integer coefficients. b[0] must be nonzero and
/// every intermediate division must be exact, otherwise NonIntegerQuotient.
IntSeries divide(const IntSeries& a, const IntSeries& b);

inline IntSeries operator+(const IntSeries& a, const IntSeries& b) { return add(a, b); }
inline IntSeries operator-(const IntSeries& a, const IntSeries& b) { return sub(a, b); }
inline IntSeries operator-(const IntSeries& a) { return negate(a); }
inline IntSeries operator*(const IntSeries& a, const IntSeries& b) { return mul(a, b); }

// In-place sparse factor updates. These are the inner loops of every product
// and double-sum kernel, each O(N) big-integer additions.

/// a <- a * (1 + sign q^m), m >= 1.
void mul_binomial_inplace(IntSeries& a, int sign, std::size_t m);
/// a <- a / (1 + sign q^m), m >= 1.
void div_binomial_inplace(IntSeries& a, int sign, std::size_t m);
/// a <- a / (1 - q^m + q^{2m}), m >= 1.
void div_trinomial_inplace(IntSeries& a, std::size_t m);

/// Sign of the Pochhammer base: (q^b; q^s)_n has factors (1 - q^{b+js}),
/// the plus convention (-q^b; q^s)_n has factors (1 + q^{b+js}).
enum class PochhammerSign { minus, plus };

/// (q^base_exp; q^step)_n truncated at q^order. n = kInfinite drops the
/// factors whose lowest exponent exceeds order, which is exact.
IntSeries pochhammer(std::size_t base_exp, std::size_t step, std::size_t n, std::size_t order,
                     PochhammerSign sign = PochhammerSign::minus);

/// 1/(q;q)_inf = sum p(n) q^n via Euler's pentagonal recurrence.
IntSeries euler_inverse(std::size_t order);

/// Generalized pentagonal numbers k(3k-1)/2 for k = 1,-1,2,-2,... up to limit,
/// paired with the sign (-1)^k of the corresponding term of (q;q)_inf.
std::vector<std::pair<std::size_t, int>> pentagonal_terms(std::size_t limit);

/// Bivariate series sum_{m<=M} x^m c_m(q), each c_m truncated at q^N.
class BiSeries {
 public:
  BiSeries() : BiSeries(0, 0) {}
  BiSeries(std::size_t x_order, std::size_t q_order);

  std::size_t x_order() const { return columns_.size() - 1; }
  std::size_t q_order() const { return q_order_; }

  const IntSeries& operator[](std::size_t m) const { return columns_[m]; }
  IntSeries& operator[](std::size_t m) { return columns_[m]; }
  const BigInt& at(std::size_t m, std::size_t n) const { return columns_[m][n]; }
  BigInt& at(std::size_t m, std::size_t n) { return columns_[m][n]; }

  /// Embeds a pure-q series as the x^0 column.
  static BiSeries from_q(const IntSeries& a, std::size_t x_order);

  BiSeries& operator+=(const BiSeries& b);
  BiSeries& operator-=(const BiSeries& b);

  friend bool operator==(const BiSeries& a, const BiSeries& b) = default;

 private:
  std::vector<IntSeries> columns_;
  std::size_t q_order_;
};

BiSeries bi_monomial(const BigInt& c, std::size_t x_deg, std::size_t q_deg, std::size_t x_order,
                     std::size_t q_order);
BiSeries bi_add(const BiSeries& a, const BiSeries& b);
BiSeries bi_sub(const BiSeries& a, const BiSeries& b);
BiSeries bi_mul(const BiSeries& a, const BiSeries& b);
/// Multiplies every column by a pure-q series.
BiSeries bi_scale(const BiSeries& a, const IntSeries& c);
/// Sum of all x-columns, i.e. the value at x = 1.
IntSeries bi_substitute_x1(const BiSeries& a);
/// Column of x^m (zero series if m exceeds the x order).
IntSeries bi_coefficient(const BiSeries& a, std::size_t m);
/// Substitution x -> x q^j: column m is shifted up by m*j powers of q.
BiSeries bi_substitute_xq(const BiSeries& a, std::size_t j);
/// 1/(1 - x^a q^b) expanded geometrically, a >= 1.
BiSeries bi_geometric(std::size_t x_deg, std::size_t q_deg, std::size_t x_order, std::size_t q_order);
/// (x q; q)_inf = sum_m (-1)^m q^{m(m+1)/2} x^m / (q;q)_m.
BiSeries bi_xq_pochhammer(std::size_t x_order, std::size_t q_order);
/// 1/(x q; q)_inf = sum_m x^m q^m / (q;q)_m.
BiSeries bi_xq_pochhammer_inverse(std::size_t x_order, std::size_t q_order);

inline BiSeries operator+(const BiSeries& a, const BiSeries& b) { return bi_add(a, b); }
inline BiSeries operator-(const BiSeries& a, const BiSeries& b) { return bi_sub(a, b); }
inline BiSeries operator*(const BiSeries& a, const BiSeries& b) { return bi_mul(a, b); }

/// Worker threads for the parallel kernels. Defaults to QRUN_THREADS when set,
/// else 1. Results never depend on the thread count.
void set_thread_count(unsigned n);
unsigned thread_count();

inline constexpr std::size_t kParallelMulThreshold = 2000;

}  // namespace krun
