#pragma once

// Brute-force reference implementations.  Nothing here uses the series,
// log-form or interval machinery of the main path: signs are exact big-integer
// evaluations, roots come from rational bisection, and Newton decay is
// measured with MPFR.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "trinom/series.hpp"
#include "trinom/sparse_poly.hpp"
#include "trinom/trinomial.hpp"

namespace trinom::oracle {

using RationalInterval = std::pair<mpq_class, mpq_class>;

/// sign f(r) by exact integer arithmetic.  ResourceError when
/// a3 log2(h(r) + 2) > 2^22.
int exact_sign_small(const Trinomial& f, const mpq_class& r);

struct IsolationResult {
  std::vector<RationalInterval> intervals;  ///< increasing, disjoint; one root each
  std::vector<mpq_class> exact_roots;       ///< roots hit exactly (also inside intervals)
  bool degenerate = false;                  ///< the single root is a root of f'
};

using SignOracle = std::function<int(const mpq_class&)>;

/// Positive roots of f by bisection driven by `sign`, split at the critical
/// point of f.  Intervals shrink to `width` (default 1/(2H 4 (d-1)^2)).
IsolationResult bisection_isolate(const Trinomial& f, const SignOracle& sign, const mpq_class& width = 0);

/// All real roots via bisection_isolate on f(x) and f(-x), exact signs.
IsolationResult isolate_real(const Trinomial& f, const mpq_class& width = 0);

/// Distinct real roots of f.
int real_root_count(const Trinomial& f);

/// Exact sign of f at its positive critical point (requires c2 c3 < 0).
int critical_value_sign(const Trinomial& f);

/// Rational bracket of width <= 2^-bits (relative to the root's scale) around
/// the root of (+-1) - c x^m + x^n that series `kind` converges to.
RationalInterval series_root(SeriesKind kind, std::int64_t m, std::int64_t n, const mpq_class& c, int bits = 200);

struct SmaleReport {
  bool pass = false;
  int iterations = 0;       ///< steps checked before stopping
  double worst_ratio = 0;   ///< max_i |z_i - zeta| / ((1/2)^(2^i - 1) |z_0 - zeta|)
  std::string reason;
};

/// Runs `iters` Newton steps for g from z0 at `bits` precision and checks
/// |z_i - zeta| <= (1/2)^(2^i - 1) |z_0 - zeta|.  zeta is the root of g in
/// [lo, hi], polished at the same precision.
SmaleReport smale_check(const SparsePoly& g, const mpq_class& z0, const RationalInterval& bracket, int iters = 6,
                        int bits = 512);

struct FractionCell {
  std::int64_t a2 = 1, a3 = 2, H = 1;
  long ill_count = 0;
  long total = 0;
  double bound = 0;  ///< 1/ln(a3 H) + 1/H
  bool ok() const { return static_cast<double>(ill_count) <= bound * static_cast<double>(total); }
};

/// Exhaustive count of ill-conditioned trinomials over ({-H..H} \ 0)^3.
FractionCell fraction_experiment(std::int64_t a2, std::int64_t a3, std::int64_t H);

/// CSV with header a2,a3,H,ill_count,total,bound.
std::string fraction_csv(const std::vector<FractionCell>& cells);

}  // namespace trinom::oracle
