#include "krun/qgen.hpp"

#include <stdexcept>

#include "krun/detail/parallel.hpp"

namespace krun {

namespace {

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
}

std::size_t term_exponent(std::size_t k, std::size_t r, std::size_t s) {
  const std::size_t t = r + s;
  return k * (k + 1) * t * t / 2 + (k + 1) * s * (s + 1) / 2;
}

/// Walks every (r, s) term of the double sum whose leading exponent is at most
/// `order`, for s in [s_begin, s_end). The sink receives the term's sign, its
/// leading exponent e, and the series 1/((q^k;q^k)_r (q^{k+1};q^{k+1})_s)
/// truncated at order - e. Each step costs one O(N) division by a binomial.
template <typename Sink>
void walk_double_sum(std::size_t k, std::size_t order, SignSelector sign, std::size_t s_begin,
                     std::size_t s_end, Sink&& sink) {
  if (s_begin >= s_end) return;
  IntSeries base = IntSeries::one(order - term_exponent(k, 0, s_begin));
  for (std::size_t j = 1; j <= s_begin; ++j) div_binomial_inplace(base, -1, (k + 1) * j);
  for (std::size_t s = s_begin; s < s_end; ++s) {
    const std::size_t e0 = term_exponent(k, 0, s);
    if (e0 > order) break;
    if (s > s_begin) {
      base.truncate(order - e0);
      div_binomial_inplace(base, -1, (k + 1) * s);
    }
    IntSeries w = base;
    for (std::size_t r = 0;; ++r) {
      const std::size_t e = term_exponent(k, r, s);
      if (e > order) break;
      if (r > 0) {
        w.truncate(order - e);
        div_binomial_inplace(w, -1, k * r);
      }
      const std::size_t parity = sign == SignSelector::alternate_s ? s : r;
      if (!sink(r, s, parity % 2 == 1 ? -1 : 1, e, w)) break;
    }
  }
}

std::size_t max_s(std::size_t k, std::size_t order) {
  std::size_t s = 0;
  while (term_exponent(k, 0, s + 1) <= order) ++s;
  return s;
}

void accumulate(IntSeries& acc, int sign, std::size_t shift, const IntSeries& w) {
  for (std::size_t i = 0; i <= w.order() && shift + i <= acc.order(); ++i) {
    if (sign > 0) {
      mpz_add(acc[shift + i].get_mpz_t(), acc[shift + i].get_mpz_t(), w[i].get_mpz_t());
    } else {
      mpz_sub(acc[shift + i].get_mpz_t(), acc[shift + i].get_mpz_t(), w[i].get_mpz_t());
    }
  }
}

void apply_fault(IntSeries& s, const std::optional<Perturbation>& fault) {
  if (fault && fault->index <= s.order()) s[fault->index] += fault->delta;
}

}  // namespace

IntSeries double_sum(int k, std::size_t order, SignSelector sign) {
  check_k(k);
  const auto kk = static_cast<std::size_t>(k);
  const std::size_t s_count = max_s(kk, order) + 1;
  const unsigned workers = order >= kParallelMulThreshold ? thread_count() : 1;
  const auto ranges = detail::chunk_ranges(s_count, workers);
  std::vector<IntSeries> partial(ranges.size(), IntSeries(order));
  detail::run_tasks(ranges.size(), [&](std::size_t i) {
    walk_double_sum(kk, order, sign, ranges[i].first, ranges[i].second,
                    [&](std::size_t, std::size_t, int sg, std::size_t e, const IntSeries& w) {
                      accumulate(partial[i], sg, e, w);
                      return true;
                    });
  });
  IntSeries total(order);
  for (const auto& p : partial) total += p;
  return total;
}

BiSeries double_sum_bivariate(int k, std::size_t x_order, std::size_t q_order, SignSelector sign) {
  check_k(k);
  const auto kk = static_cast<std::size_t>(k);
  BiSeries out(x_order, q_order);
  walk_double_sum(kk, q_order, sign, 0, max_s(kk, q_order) + 1,
                  [&](std::size_t r, std::size_t s, int sg, std::size_t e, const IntSeries& w) {
                    const std::size_t m = kk * r + (kk + 1) * s;
                    if (m > x_order) return false;
                    accumulate(out[m], sg, e, w);
                    return true;
                  });
  return out;
}

IntSeries hk_series(int k, std::size_t order) { return double_sum(k, order, SignSelector::alternate_s); }

IntSeries gbar_series(int k, std::size_t order) {
  return divide(hk_series(k, order), pochhammer(1, 1, kInfinite, order));
}

// The double sum with (-1)^r is (q;q)_inf * G_k, not G_k itself.
IntSeries gk_series(int k, std::size_t order) {
  return divide(double_sum(k, order, SignSelector::alternate_r), pochhammer(1, 1, kInfinite, order));
}

BiSeries gbar_bivariate(int k, std::size_t x_order, std::size_t q_order) {
  return bi_xq_pochhammer_inverse(x_order, q_order) *
         double_sum_bivariate(k, x_order, q_order, SignSelector::alternate_s);
}

BiSeries lbar_bivariate(int k, std::size_t x_order, std::size_t q_order) {
  return bi_xq_pochhammer(x_order, q_order) * gbar_bivariate(k, x_order, q_order);
}

std::vector<IntSeries> lambda_coeffs(int k, std::size_t m_max, std::size_t order) {
  check_k(k);
  const auto kk = static_cast<std::size_t>(k);
  const std::size_t tri = kk * (kk + 1) / 2;
  std::vector<IntSeries> lam;
  lam.reserve(m_max + 1);
  for (std::size_t m = 0; m <= m_max; ++m) {
    if (m == 0) {
      lam.push_back(IntSeries::one(order));
    } else if (m < kk) {
      lam.emplace_back(order);
    } else if (m == kk) {
      IntSeries seed = IntSeries::monomial(1, tri, order);
      div_binomial_inplace(seed, -1, kk);
      lam.push_back(std::move(seed));
    } else {
      IntSeries diff = lam[m - kk];
      if (m >= kk + 1) diff -= lam[m - kk - 1];
      IntSeries rhs = diff.shifted(m * (kk + 1) - tri);
      IntSeries divisor = IntSeries::one(order);
      if (m <= order) divisor[m] = -1;
      lam.push_back(divide(rhs, divisor));
    }
  }
  return lam;
}

IntSeries phi_series(std::size_t order) {
  IntSeries total(order);
  IntSeries w = IntSeries::one(order);
  for (std::size_t n = 0; n * n <= order; ++n) {
    if (n > 0) {
      w.truncate(order - n * n);
      div_binomial_inplace(w, +1, 2 * n);
    }
    accumulate(total, 1, n * n, w);
  }
  return total;
}

IntSeries chi_series(std::size_t order) {
  IntSeries total(order);
  IntSeries w = IntSeries::one(order);
  for (std::size_t n = 0; n * n <= order; ++n) {
    if (n > 0) {
      w.truncate(order - n * n);
      div_trinomial_inplace(w, n);
    }
    accumulate(total, 1, n * n, w);
  }
  return total;
}

IntSeries fine_bracket_series(std::size_t order) {
  IntSeries total = IntSeries::one(order);
  // prod_{j<n} (1 + q^{2j}) / (1 - q^j), advanced one factor per n.
  IntSeries prod = IntSeries::one(order);
  for (std::size_t n = 1; n <= order; ++n) {
    if (n > 1) {
      prod.truncate(order - n);
      mul_binomial_inplace(prod, +1, 2 * (n - 1));
      div_binomial_inplace(prod, -1, n - 1);
    }
    IntSeries term = prod.truncated(order - n);
    div_binomial_inplace(term, -1, n);
    term *= BigInt(2);
    accumulate(total, 1, n, term);
  }
  return total;
}

VerificationReport compare_series(std::string name, const IntSeries& lhs, const IntSeries& rhs,
                                  std::optional<Perturbation> fault) {
  VerificationReport rep;
  rep.identity_name = std::move(name);
  rep.trunc_order = std::min(lhs.order(), rhs.order());
  IntSeries left = lhs;
  apply_fault(left, fault);
  for (std::size_t i = 0; i <= rep.trunc_order; ++i) {
    if (left[i] != rhs[i]) {
      rep.passed = false;
      rep.first_mismatch = i;
      rep.lhs_coeff = left[i];
      rep.rhs_coeff = rhs[i];
      break;
    }
  }
  return rep;
}

VerificationReport compare_bi_series(std::string name, const BiSeries& lhs, const BiSeries& rhs,
                                     std::optional<Perturbation> fault) {
  VerificationReport rep;
  rep.identity_name = std::move(name);
  const std::size_t xm = std::min(lhs.x_order(), rhs.x_order());
  const std::size_t qn = std::min(lhs.q_order(), rhs.q_order());
  rep.trunc_order = qn;
  rep.detail = "x-order " + std::to_string(xm) + ", q-order " + std::to_string(qn) +
               "; mismatch index is m*(q_order+1)+n";
  BiSeries left = lhs;
  if (fault) {
    const std::size_t m = fault->index / (qn + 1);
    const std::size_t n = fault->index % (qn + 1);
    if (m <= left.x_order() && n <= left.q_order()) left.at(m, n) += fault->delta;
  }
  for (std::size_t m = 0; m <= xm && rep.passed; ++m) {
    for (std::size_t n = 0; n <= qn; ++n) {
      if (left.at(m, n) != rhs.at(m, n)) {
        rep.passed = false;
        rep.first_mismatch = m * (qn + 1) + n;
        rep.lhs_coeff = left.at(m, n);
        rep.rhs_coeff = rhs.at(m, n);
        break;
      }
    }
  }
  return rep;
}

VerificationReport check_gbar_qdiff(int k, std::size_t x_order, std::size_t q_order,
                                    std::optional<Perturbation> fault) {
  check_k(k);
  const auto kk = static_cast<std::size_t>(k);
  const BiSeries g = gbar_bivariate(k, x_order, q_order);
  // Smallest part not overlined: Gbar(xq) / (1 - xq).
  const BiSeries plain = bi_geometric(1, 1, x_order, q_order) * bi_substitute_xq(g, 1);
  // Smallest part 1' forces the run 1'..k' and a gap at k+1.
  BiSeries run = bi_monomial(1, kk, kk * (kk + 1) / 2, x_order, q_order);
  for (std::size_t i = 1; i <= kk; ++i) run = run * bi_geometric(1, i, x_order, q_order);
  run = run * bi_substitute_xq(g, kk + 1);
  return compare_bi_series("gbar_qdiff(k=" + std::to_string(k) + ")", g, plain + run, fault);
}

VerificationReport check_lbar_qdiff(int k, std::size_t x_order, std::size_t q_order,
                                    std::optional<Perturbation> fault) {
  check_k(k);
  const auto kk = static_cast<std::size_t>(k);
  const BiSeries l = lbar_bivariate(k, x_order, q_order);
  const BiSeries lhs = l - bi_substitute_xq(l, 1);
  const BiSeries factor = bi_monomial(1, kk, kk * (kk + 1) / 2, x_order, q_order) *
                          (bi_monomial(1, 0, 0, x_order, q_order) - bi_monomial(1, 1, kk + 1, x_order, q_order));
  const BiSeries rhs = factor * bi_substitute_xq(l, kk + 1);
  return compare_bi_series("lbar_qdiff(k=" + std::to_string(k) + ")", lhs, rhs, fault);
}

std::vector<VerificationReport> check_q_difference(int k, std::size_t x_order, std::size_t q_order) {
  return {check_gbar_qdiff(k, x_order, q_order), check_lbar_qdiff(k, x_order, q_order)};
}

VerificationReport check_lambda(int k, std::size_t m_max, std::size_t order,
                                std::optional<Perturbation> fault) {
  const auto lam = lambda_coeffs(k, m_max, order);
  BiSeries from_recurrence(m_max, order);
  for (std::size_t m = 0; m <= m_max; ++m) from_recurrence[m] = lam[m];
  return compare_bi_series("lambda_recurrence(k=" + std::to_string(k) + ")", from_recurrence,
                           lbar_bivariate(k, m_max, order), fault);
}

VerificationReport check_gbar1_fine(std::size_t order, std::optional<Perturbation> fault) {
  return compare_series("gbar1_fine", gbar_series(1, order), fine_bracket_series(order), fault);
}

VerificationReport check_gbar1_phi_with(std::size_t order, const IntSeries& phi_candidate) {
  const IntSeries lhs = gbar_series(1, order);
  const IntSeries rhs = mul(pochhammer(1, 1, kInfinite, order), phi_candidate);
  VerificationReport rep = compare_series("gbar1_phi", lhs, rhs);
  rep.informational = true;
  for (std::size_t i = 0; i < 10 && i <= rep.trunc_order; ++i) rep.table.push_back({i, lhs[i], rhs[i]});
  rep.detail = rep.passed ? "Gbar_1 equals (q;q)_inf * phi to the truncation order"
                          : "Gbar_1 differs from (q;q)_inf * phi with phi(q) = sum q^{n^2}/(-q^2;q^2)_n";
  return rep;
}

VerificationReport check_gbar1_phi(std::size_t order) { return check_gbar1_phi_with(order, phi_series(order)); }

VerificationReport check_g2_chi(std::size_t order, std::optional<Perturbation> fault) {
  const IntSeries numer = pochhammer(3, 3, kInfinite, order, PochhammerSign::plus);
  const IntSeries rhs = divide(mul(numer, chi_series(order)), pochhammer(2, 2, kInfinite, order));
  return compare_series("g2_chi", gk_series(2, order), rhs, fault);
}

}  // namespace krun
