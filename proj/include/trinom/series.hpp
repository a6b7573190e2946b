#pragma once

// Truncated A-hypergeometric series for the positive roots of
//   1 - c x^m + x^n   (low, hi; c > r)
//  -1 - c x^m + x^n   (mid for c < r, hi_minus for c > r)
// with gcd(m, n) = 1 and r = r_{m,n} = n / (m^(m/n) (n-m)^((n-m)/n)).
//
//   low      c^(-1/m)     [1 + sum A_k u^k],          u = c^(-n/m)
//   hi       c^(1/(n-m))  [1 - sum B_k v^k],          v = c^(-n/(n-m))
//   hi_minus c^(1/(n-m))  [1 + sum (-1)^(k+1) B_k v^k]
//   mid                    1 + sum C_k c^k
//
//   A_k = 1/(k m^k)     prod_{j<k} (1 + kn - jm) / j
//   B_k = 1/(k (n-m)^k) prod_{j<k} (km + j(n-m) - 1) / j
//   C_k = 1/(k n^k)     prod_{j<k} (1 + km - jn) / j
//
// |A_k u^k| <= (r/c)^(kn/m), |B_k v^k| <= (r/c)^(kn/(n-m)), |C_k c^k| <= (c/r)^k.

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "trinom/dyadic.hpp"

namespace trinom {

enum class SeriesKind { low, hi, mid, hi_minus };

std::string to_string(SeriesKind kind);

struct TruncationPlan {
  std::int64_t ell = 1;
  std::int64_t bits = 64;
  bool adaptive = false;
};

/// ceil(ln(a3 H) [ln(24 (a3-1)^2) + ln(a3 H)] / ln 2).
std::int64_t truncation_length(std::int64_t a3, const mpz_class& H);

/// r_{m,n} to `bits` relative bits.
DyadicInterval r_mn(std::int64_t m, std::int64_t n, std::int64_t bits);

/// Exact k-th coefficient (A_k, B_k or C_k; hi_minus shares B_k).
mpq_class series_coefficient(SeriesKind kind, std::int64_t m, std::int64_t n, std::int64_t k);

/// Upper bound on |x_kind(c) - x_kind^(ell)(c)| for every c in the interval.
Dyadic tail_bound(SeriesKind kind, std::int64_t m, std::int64_t n, const DyadicInterval& c, std::int64_t ell,
                  std::int64_t prec = 64);

/// Interval containing both the truncated sum and the true series value
/// x_kind(c) for every c in the interval.  DomainError unless c is strictly on
/// the convergent side of r_{m,n}.
DyadicInterval eval_series(SeriesKind kind, std::int64_t m, std::int64_t n, const DyadicInterval& c,
                           const TruncationPlan& plan);

/// Smallest ell <= max_ell whose tail bound is at most rel_target times the
/// leading term; nullopt-like -1 when none is.
std::int64_t adaptive_length(SeriesKind kind, std::int64_t m, std::int64_t n, const DyadicInterval& c,
                             double rel_target, std::int64_t max_ell);

}  // namespace trinom
