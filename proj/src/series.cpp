#include "trinom/series.hpp"

#include <algorithm>
#include <cmath>

#include "trinom/logform.hpp"

namespace trinom {
namespace {

const DyadicInterval kOne{Dyadic(1)};

mpz_class Z(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

// q-exponent numerator/denominator: q = (r/c)^(num/den), or c/r for mid.
std::pair<std::int64_t, std::int64_t> q_exponent(SeriesKind kind, std::int64_t m, std::int64_t n) {
  switch (kind) {
    case SeriesKind::low: return {n, m};
    case SeriesKind::hi:
    case SeriesKind::hi_minus: return {n, n - m};
    case SeriesKind::mid: return {1, 1};
  }
  return {1, 1};
}

void check_side(SeriesKind kind, const DyadicInterval& c, const DyadicInterval& r) {
  if (kind == SeriesKind::mid) {
    if (c.lo().sign() < 0 || !(c.hi() < r.lo())) {
      throw DomainError("x_mid needs 0 <= c < r_{m,n}, got c in " + c.to_string());
    }
  } else if (!(r.hi() < c.lo())) {
    throw DomainError("x_" + to_string(kind) + " needs c > r_{m,n}, got c in " + c.to_string());
  }
}

// Interval for q, the per-term decay ratio.
DyadicInterval decay_ratio(SeriesKind kind, std::int64_t m, std::int64_t n, const DyadicInterval& c,
                           const DyadicInterval& r, std::int64_t prec) {
  if (kind == SeriesKind::mid) return div(c, r, prec);
  const auto [num, den] = q_exponent(kind, m, n);
  const DyadicInterval l = sub(log(r, prec), log(c, prec), prec);
  return exp(div_int(mul_int(l, Z(num), prec), Z(den), prec), prec);
}

// Leading factor outside the bracket: c^(-1/m), c^(1/(n-m)) or 1.
DyadicInterval prefactor(SeriesKind kind, std::int64_t m, std::int64_t n, const DyadicInterval& c, std::int64_t prec) {
  switch (kind) {
    case SeriesKind::low: return exp(-div_int(log(c, prec), Z(m), prec), prec);
    case SeriesKind::hi:
    case SeriesKind::hi_minus: return exp(div_int(log(c, prec), Z(n - m), prec), prec);
    case SeriesKind::mid: return kOne;
  }
  return kOne;
}

// The expansion variable divided by the k-th power base: u/m, v/(n-m), c/n.
DyadicInterval scaled_variable(SeriesKind kind, std::int64_t m, std::int64_t n, const DyadicInterval& c,
                               std::int64_t prec) {
  switch (kind) {
    case SeriesKind::low: {
      const DyadicInterval u = exp(-div_int(mul_int(log(c, prec), Z(n), prec), Z(m), prec), prec);
      return div_int(u, Z(m), prec);
    }
    case SeriesKind::hi:
    case SeriesKind::hi_minus: {
      const DyadicInterval v = exp(-div_int(mul_int(log(c, prec), Z(n), prec), Z(n - m), prec), prec);
      return div_int(v, Z(n - m), prec);
    }
    case SeriesKind::mid: return div_int(c, Z(n), prec);
  }
  return kOne;
}

// Numerator factor of the j-th product term for index k.
mpz_class factor_numerator(SeriesKind kind, std::int64_t m, std::int64_t n, std::int64_t k, std::int64_t j) {
  switch (kind) {
    case SeriesKind::low: return 1 + Z(k) * Z(n) - Z(j) * Z(m);
    case SeriesKind::hi:
    case SeriesKind::hi_minus: return Z(k) * Z(m) + Z(j) * Z(n - m) - 1;
    case SeriesKind::mid: return 1 + Z(k) * Z(m) - Z(j) * Z(n);
  }
  return 0;
}

Dyadic tail_from_ratio(const DyadicInterval& q, const DyadicInterval& pre, std::int64_t ell, std::int64_t prec) {
  const Dyadic qh = q.hi();
  if (!(qh < Dyadic(1))) throw DomainError("series tail: decay ratio not below 1");
  const DyadicInterval qq(qh);
  const DyadicInterval geometric = div(pow(qq, static_cast<std::uint64_t>(ell + 1), prec),
                                       sub(kOne, qq, prec), prec);
  return mul(pre, geometric, prec).hi();
}

}  // namespace

std::string to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::low: return "low";
    case SeriesKind::hi: return "hi";
    case SeriesKind::mid: return "mid";
    case SeriesKind::hi_minus: return "hi_minus";
  }
  return "?";
}

std::int64_t truncation_length(std::int64_t a3, const mpz_class& H) {
  long ex = 0;
  const double mant = mpz_get_d_2exp(&ex, mpz_class(H * Z(a3)).get_mpz_t());
  const long double ln_dh = std::log(static_cast<long double>(mant)) + ex * std::log(2.0L);
  const long double d1 = static_cast<long double>(a3 - 1);
  const long double v = ln_dh * (std::log(24.0L) + 2 * std::log(d1) + ln_dh) / std::log(2.0L);
  return static_cast<std::int64_t>(std::ceil(v));
}

DyadicInterval r_mn(std::int64_t m, std::int64_t n, std::int64_t bits) {
  LogLinearForm form;
  form.add(n, n).add(-m, m).add(-(n - m), n - m);
  return exp_form(form, n, bits);
}

mpq_class series_coefficient(SeriesKind kind, std::int64_t m, std::int64_t n, std::int64_t k) {
  mpq_class prod = 1;
  for (std::int64_t j = 1; j < k; ++j) prod *= mpq_class(factor_numerator(kind, m, n, k, j), Z(j));
  const std::int64_t base = kind == SeriesKind::low ? m : (kind == SeriesKind::mid ? n : n - m);
  mpz_class denom;
  mpz_pow_ui(denom.get_mpz_t(), Z(base).get_mpz_t(), static_cast<unsigned long>(k));
  denom *= Z(k);
  mpq_class out = prod / denom;
  out.canonicalize();
  return out;
}

Dyadic tail_bound(SeriesKind kind, std::int64_t m, std::int64_t n, const DyadicInterval& c, std::int64_t ell,
                  std::int64_t prec) {
  const DyadicInterval r = r_mn(m, n, prec);
  check_side(kind, c, r);
  if (kind == SeriesKind::mid && c.hi().is_zero()) return Dyadic(0);
  const DyadicInterval q = decay_ratio(kind, m, n, c, r, prec);
  return tail_from_ratio(q, prefactor(kind, m, n, c, prec), ell, prec);
}

DyadicInterval eval_series(SeriesKind kind, std::int64_t m, std::int64_t n, const DyadicInterval& c,
                           const TruncationPlan& plan) {
  const std::int64_t prec = std::max<std::int64_t>(plan.bits, 32);
  const DyadicInterval r = r_mn(m, n, prec);
  check_side(kind, c, r);
  if (kind == SeriesKind::mid && c.hi().is_zero()) return kOne;

  const DyadicInterval t = scaled_variable(kind, m, n, c, prec);
  DyadicInterval sum(Dyadic(0));
  for (std::int64_t k = 1; k <= plan.ell; ++k) {
    DyadicInterval term = t;
    for (std::int64_t j = 1; j < k; ++j) {
      term = div_int(mul_int(mul(term, t, prec), factor_numerator(kind, m, n, k, j), prec), Z(j), prec);
    }
    term = div_int(term, Z(k), prec);
    if (kind == SeriesKind::hi_minus && k % 2 == 0) term = -term;
    sum = add(sum, term, prec);
  }
  if (kind == SeriesKind::hi) sum = -sum;

  const DyadicInterval pre = prefactor(kind, m, n, c, prec);
  const DyadicInterval value = mul(pre, add(kOne, sum, prec), prec);
  const DyadicInterval q = decay_ratio(kind, m, n, c, r, prec);
  return widen(value, tail_from_ratio(q, pre, plan.ell, prec), prec);
}

std::int64_t adaptive_length(SeriesKind kind, std::int64_t m, std::int64_t n, const DyadicInterval& c,
                             double rel_target, std::int64_t max_ell) {
  const std::int64_t prec = 64;
  const DyadicInterval r = r_mn(m, n, prec);
  check_side(kind, c, r);
  if (kind == SeriesKind::mid && c.hi().is_zero()) return 1;
  const DyadicInterval q = decay_ratio(kind, m, n, c, r, prec);
  if (!(q.hi() < Dyadic(1))) return -1;
  const DyadicInterval lq = log(DyadicInterval(q.hi()), prec);
  const double ln_q = lq.hi().to_double();
  const double ln_target = std::log(rel_target) + std::log1p(-std::exp(ln_q));
  double est = ln_q < 0 ? std::ceil(ln_target / ln_q) - 1 : 1e300;
  if (!(est < static_cast<double>(max_ell) + 1)) return -1;
  std::int64_t ell = std::max<std::int64_t>(1, static_cast<std::int64_t>(est));
  const DyadicInterval unit = kOne;
  const Dyadic target = from_rational(mpq_class(rel_target), 64, Round::down);
  for (; ell <= max_ell; ++ell) {
    if (!(target < tail_from_ratio(q, unit, ell, prec))) return ell;
  }
  return -1;
}

}  // namespace trinom
